#include "cr/rootsystem.hpp"

#include <cstdint>

namespace cr {
namespace {
const std::string kE6 = R"TABLE(# Positive roots of E6, one per line: label, then coefficients over the
# simple roots in column order sigma alpha beta gamma delta epsilon.
# version 1
1 1 0 0 0 0 0
2 1 1 1 1 1 0
3 1 0 1 1 1 1
4 1 1 1 2 1 0
5 1 0 1 2 1 1
6 1 1 2 3 2 1
7 1 0 0 1 0 0
8 1 1 2 2 2 1
9 1 0 1 1 0 0
10 1 0 0 1 1 0
11 1 0 1 1 1 0
12 1 1 1 2 1 1
13 1 1 2 2 1 1
14 1 1 1 2 2 1
15 1 1 1 1 0 0
16 1 0 0 1 1 1
17 1 0 1 2 1 0
18 1 1 1 1 1 1
19 1 1 2 2 1 0
20 1 0 1 2 2 1
21 2 1 2 3 2 1
22 0 1 0 0 0 0
23 0 0 1 0 0 0
24 0 0 0 1 0 0
25 0 0 0 0 1 0
26 0 0 0 0 0 1
27 0 1 1 0 0 0
28 0 0 1 1 0 0
29 0 0 0 1 1 0
30 0 0 0 0 1 1
31 0 1 1 1 0 0
32 0 0 1 1 1 0
33 0 0 0 1 1 1
34 0 1 1 1 1 0
35 0 0 1 1 1 1
36 0 1 1 1 1 1
)TABLE";
const std::string kE7Case2 = R"TABLE(# Labeled radical roots of E7 used by the rank-7 case-2 scan: label, then
# coefficients in column order sigma alpha beta gamma delta epsilon eta.
# version 1
1 1 1 1 1 1 0 0
2 1 0 1 1 2 1 1
3 1 1 2 2 2 1 1
4 1 0 1 1 1 1 0
5 1 1 2 2 2 2 1
6 1 1 1 2 3 2 1
7 1 0 0 1 1 0 0
8 1 0 0 0 1 1 0
9 1 0 0 0 1 1 1
10 1 1 1 2 2 2 1
11 1 0 1 2 3 2 1
12 1 0 0 1 1 1 1
13 1 1 1 1 2 1 0
14 1 0 1 2 2 1 0
15 2 1 2 3 4 3 2
)TABLE";
const std::string kE8Case1 = R"TABLE(# Labeled radical roots of E8 used by the rank-8 case-1 scan: label, then
# coefficients in column order sigma alpha beta gamma delta epsilon eta xi.
# version 1
1 1 0 0 0 0 0 0 0
2 1 0 1 1 1 1 0 0
3 1 0 0 0 0 1 1 1
4 1 0 1 1 2 2 1 0
5 1 1 1 1 1 2 2 1
6 1 1 1 1 2 3 2 1
7 1 1 2 2 3 3 2 1
8 2 0 1 1 2 3 2 1
)TABLE";
const std::string kE8Case2 = R"TABLE(# Labeled radical roots of E8 used by the rank-8 case-2 scan: label, then
# coefficients in column order sigma alpha beta gamma delta epsilon eta xi.
# version 1
1 1 0 0 0 0 1 0 0
2 1 0 0 0 1 1 0 0
3 1 0 0 0 0 1 1 0
4 1 0 1 1 1 1 1 0
5 1 0 1 1 1 1 1 1
6 1 0 0 0 1 2 2 1
7 1 1 1 1 1 1 1 1
8 1 1 1 1 2 2 1 0
9 1 1 1 1 1 2 1 1
10 1 0 1 1 2 2 1 1
11 1 1 2 2 2 2 1 0
12 1 1 1 1 2 2 2 1
13 1 0 1 1 2 3 2 1
14 1 1 2 2 2 3 2 1
15 2 1 2 2 2 3 2 1
)TABLE";
}  // namespace

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

const std::string& embedded_table_text(LabelTable table) {
    switch (table) {
        case LabelTable::E6: return kE6;
        case LabelTable::E7Case2: return kE7Case2;
        case LabelTable::E8Case1: return kE8Case1;
        case LabelTable::E8Case2: return kE8Case2;
        default: throw RootError("no embedded table for this labeling");
    }
}

std::uint64_t embedded_table_checksum(LabelTable table) {
    switch (table) {
        case LabelTable::E6: return 0xe7456d7a8a577dabull;
        case LabelTable::E7Case2: return 0xf92e454f31d9f97cull;
        case LabelTable::E8Case1: return 0x6f05b7744280778eull;
        case LabelTable::E8Case2: return 0xd6989c88fea51709ull;
        default: throw RootError("no embedded table for this labeling");
    }
}

}  // namespace cr
