#include <cstdio>

int main() {
    std::puts("hurwitz: placeholder");
    return 0;
}
