#include "mqite/problems.hpp"

namespace mqite::detail {

// Embedded copy of data/nuclear_pshell.txt; fnv1a-checked at load.
const char* const kNuclearPShellTable =
    "# Two neutrons in the 0p shell (0p3/2 + 0p1/2, six single-particle states),\n"
    "# Cohen-Kurath empirical interaction, Jordan-Wigner occupation mapping.\n"
    "# Weights in MeV. One term per line: weight  pauli-label (qubit 1 = leftmost).\n"
    "-0.446591 YXYZZX\n"
    "-0.446591 YXXZZY\n"
    "-0.446591 YYYZZY\n"
    "0.446591 YYXZZX\n"
    "0.446591 XXYZZY\n"
    "-0.446591 XXXZZX\n"
    "-0.446591 XYYZZX\n"
    "-0.446591 XYXZZY\n"
    "0.329172 YXIYXI\n"
    "0.56401 YXIXYI\n"
    "0.329172 YYIYYI\n"
    "-0.56401 YYIXXI\n"
    "-0.56401 XXIYYI\n"
    "0.329172 XXIXXI\n"
    "0.56401 XYIYXI\n"
    "0.329172 XYIXYI\n"
    "0.435575 YZIYII\n"
    "0.435575 XZIXII\n"
    "-0.101688 YXYXII\n"
    "-0.101688 YYXXII\n"
    "0.101688 YXXYII\n"
    "-0.101688 YYYYII\n"
    "-0.101688 XXXXII\n"
    "0.101688 XYYXII\n"
    "-0.101688 XXYYII\n"
    "-0.101688 XYXYII\n"
    "-0.18861 YZXYXI\n"
    "0.18861 YZYYYI\n"
    "0.18861 YZXXYI\n"
    "0.18861 YZYXXI\n"
    "0.18861 XZXYYI\n"
    "0.18861 XZYYXI\n"
    "0.18861 XZXXXI\n"
    "-0.18861 XZYXYI\n"
    "-0.108894 YZXIYX\n"
    "0.108894 YZYIYY\n"
    "0.108894 YZXIXY\n"
    "0.108894 YZYIXX\n"
    "0.108894 XZXIYY\n"
    "0.108894 XZYIYX\n"
    "0.108894 XZXIXX\n"
    "-0.108894 XZYIXY\n"
    "-0.217787 YZZYZI\n"
    "-0.217787 XZZXZI\n"
    "-0.101688 YXIIYX\n"
    "-0.101688 YYIIXX\n"
    "0.101688 YXIIXY\n"
    "-0.101688 YYIIYY\n"
    "-0.101688 XXIIXX\n"
    "0.101688 XYIIYX\n"
    "-0.101688 XXIIYY\n"
    "-0.101688 XYIIXY\n"
    "-0.217787 YZZYIZ\n"
    "-0.217787 XZZXIZ\n"
    "0.217787 IYIZYI\n"
    "0.217787 IXIZXI\n"
    "-0.108894 IYXYZX\n"
    "0.108894 IYYYZY\n"
    "0.108894 IYXXZY\n"
    "0.108894 IYYXZX\n"
    "0.108894 IXXYZY\n"
    "0.108894 IXYYZX\n"
    "0.108894 IXXXZX\n"
    "-0.108894 IXYXZY\n"
    "0.217787 IYZIYI\n"
    "0.217787 IXZIXI\n"
    "-0.18861 IYZXYX\n"
    "0.18861 IYZYYY\n"
    "0.18861 IYZXXY\n"
    "0.18861 IYZYXX\n"
    "0.18861 IXZXYY\n"
    "0.18861 IXZYYX\n"
    "0.18861 IXZXXX\n"
    "-0.18861 IXZYXY\n"
    "-0.435575 IYZZYZ\n"
    "-0.435575 IXZZXZ\n"
    "0.213531 IIYXYX\n"
    "0.213531 IIYYXX\n"
    "-0.213531 IIYXXY\n"
    "0.213531 IIYYYY\n"
    "0.213531 IIXXXX\n"
    "-0.213531 IIXYYX\n"
    "0.213531 IIXXYY\n"
    "0.213531 IIXYXY\n"
;

const std::uint64_t kNuclearPShellFnv1a = 0xbb80e116734f1e7dULL;

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace mqite::detail
