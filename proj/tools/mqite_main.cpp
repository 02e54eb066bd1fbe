#include <cstdio>

int main() {
    std::puts("mqite: CLI under construction");
    return 0;
}
