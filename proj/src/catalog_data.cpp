#include "catalog_data.hpp"

namespace simplicia::detail {

const std::vector<std::pair<std::string_view, std::string_view>>& verbatim_lists() {
    static const std::vector<std::pair<std::string_view, std::string_view>> lists{
        {"klein_8", R"(# name: klein_8
u1 u2 v1
u1 u2 v2
u1 u3 v1
u1 u3 v3
u1 u4 v2
u1 u4 v4
u2 u3 v2
u2 u3 v4
u2 u4 v1
u2 u4 v3
u3 u4 v3
u3 u4 v4
u1 v3 v4
u2 v3 v4
u3 v1 v2
u4 v1 v2
)"},
        {"s3_8_35", R"(# name: s3_8_35
1 2 3 4
1 2 6 7
1 2 5 6
1 2 4 5
2 3 4 5
2 3 5 6
2 3 6 7
3 4 6 7
3 4 5 6
4 5 6 7
1 2 3 8
1 2 7 8
2 3 7 8
1 3 4 8
3 4 7 8
1 4 5 8
4 5 7 8
1 5 6 8
1 6 7 8
5 6 7 8
)"},
        {"s3_8_36", R"(# name: s3_8_36
1 2 3 4
1 2 5 6
1 2 4 5
1 5 6 7
2 3 4 5
2 3 5 6
2 3 6 7
3 4 6 7
3 4 5 6
4 5 6 7
1 2 6 8
1 6 7 8
2 6 7 8
1 2 3 8
2 3 7 8
1 3 4 8
3 4 7 8
1 4 5 8
1 5 7 8
4 5 7 8
)"},
        {"s3_8_37", R"(# name: s3_8_37
1 2 3 4
1 2 5 6
1 2 4 5
1 4 5 7
2 3 4 5
2 3 5 6
2 3 6 7
3 4 6 7
3 4 5 6
4 5 6 7
1 5 6 8
1 5 7 8
5 6 7 8
1 2 6 8
2 6 7 8
1 2 3 8
2 3 7 8
1 3 4 8
1 4 7 8
3 4 7 8
)"},
        {"s3_8_38", R"(# name: s3_8_38
1 2 3 4
1 2 3 7
1 2 6 7
1 3 4 7
1 5 6 7
2 3 4 5
2 3 6 7
3 4 6 7
3 4 5 6
4 5 6 7
2 3 5 8
2 3 6 8
3 5 6 8
1 2 6 8
1 5 6 8
1 2 4 8
2 4 5 8
1 4 7 8
1 5 7 8
4 5 7 8
)"},
        {"rp3_11", R"(# name: rp3_11
1 2 3 7
1 2 3 b
1 2 6 9
1 2 6 b
1 2 7 9
1 3 5 a
1 3 5 b
1 3 7 a
1 4 7 9
1 4 7 a
1 4 8 9
1 4 8 a
1 5 6 8
1 5 6 b
1 5 8 a
1 6 8 9
2 3 4 8
2 3 4 b
2 3 7 8
2 4 6 a
2 4 6 b
2 4 8 a
2 5 7 8
2 5 7 9
2 5 8 a
2 5 9 a
2 6 9 a
3 4 5 9
3 4 5 b
3 4 8 9
3 5 9 a
3 6 7 8
3 6 7 a
3 6 8 9
3 6 9 a
4 5 6 7
4 5 6 b
4 5 7 9
4 6 7 a
5 6 7 8
)"},
        {"l3_12", R"(# name: l3_12
1 2 3 4
1 2 3 a
1 2 4 9
1 2 5 6
1 2 5 9
1 2 6 b
1 2 a b
1 3 4 7
1 3 7 8
1 3 8 a
1 4 7 9
1 5 6 c
1 5 7 9
1 5 7 c
1 6 b c
1 7 8 c
1 8 a b
1 8 b c
2 3 4 c
2 3 a c
2 4 8 9
2 4 8 c
2 5 6 8
2 5 8 9
2 6 7 8
2 6 7 b
2 7 8 c
2 7 a b
2 7 a c
3 4 5 6
3 4 5 b
3 4 6 7
3 4 b c
3 5 6 8
3 5 8 9
3 5 9 b
3 6 7 8
3 8 9 a
3 9 a c
3 9 b c
4 5 6 a
4 5 a b
4 6 7 9
4 6 9 a
4 8 9 a
4 8 a b
4 8 b c
5 6 a c
5 7 9 b
5 7 a b
5 7 a c
6 7 9 b
6 9 a c
6 9 b c
)"},
        {"h3_16", R"(# name: h3_16
1 2 4 9
1 2 4 f
1 2 6 e
1 2 6 f
1 2 9 e
1 3 4 c
1 3 4 f
1 3 7 a
1 3 7 c
1 3 a f
1 4 9 c
1 5 6 d
1 5 6 e
1 5 8 b
1 5 8 d
1 5 b e
1 6 d f
1 7 8 a
1 7 8 b
1 7 b c
1 8 a d
1 9 b c
1 9 b e
1 a d f
2 3 5 a
2 3 5 b
2 3 7 a
2 3 7 d
2 3 b d
2 4 9 d
2 4 b d
2 4 b f
2 5 8 b
2 5 8 c
2 5 a c
2 6 a c
2 6 a e
2 6 c f
2 7 9 d
2 7 9 e
2 7 a e
2 8 b f
2 8 c f
3 4 5 e
3 4 5 f
3 4 c e
3 5 a f
3 5 b e
3 7 c d
3 b d e
3 c d e
4 5 6 7
4 5 6 e
4 5 7 f
4 6 7 b
4 6 a b
4 6 a e
4 7 b f
4 8 9 c
4 8 9 d
4 8 a d
4 8 a e
4 8 c e
4 a b d
5 6 7 d
5 7 9 d
5 7 9 f
5 8 9 c
5 8 9 d
5 9 a c
5 9 a f
6 7 b c
6 7 c d
6 a b c
6 c d f
7 8 a e
7 8 b f
7 8 e f
7 9 e f
8 c e f
9 a b c
9 a b g
9 a f g
9 b e g
9 e f g
a b d g
a d f g
b d e g
c d e f
d e f g
)"},
        {"s2xs2_11", R"(# name: s2xs2_11
1 2 3 4 6
1 2 3 4 7
1 2 3 6 9
1 2 3 7 9
1 2 4 5 8
1 2 4 5 9
1 2 4 6 8
1 2 4 7 9
1 2 5 6 8
1 2 5 6 9
1 3 4 6 7
1 3 5 6 7
1 3 5 6 9
1 3 5 7 a
1 3 5 9 b
1 3 5 a b
1 3 7 9 a
1 3 9 a b
1 4 5 8 a
1 4 5 9 b
1 4 5 a b
1 4 6 7 b
1 4 6 8 a
1 4 6 a b
1 4 7 9 b
1 5 6 7 8
1 5 7 8 a
1 6 7 8 b
1 6 8 a b
1 7 8 a b
1 7 9 a b
2 3 4 6 8
2 3 4 7 8
2 3 5 7 a
2 3 5 7 b
2 3 5 a b
2 3 6 8 a
2 3 6 9 a
2 3 7 8 b
2 3 7 9 a
2 3 8 a b
2 4 5 8 9
2 4 7 8 9
2 5 6 8 b
2 5 6 9 a
2 5 6 a b
2 5 7 8 9
2 5 7 8 b
2 5 7 9 a
2 6 8 a b
3 4 6 7 b
3 4 6 8 a
3 4 6 9 a
3 4 6 9 b
3 4 7 8 b
3 4 8 9 a
3 4 8 9 b
3 5 6 7 b
3 5 6 9 b
3 8 9 a b
4 5 6 9 a
4 5 6 9 b
4 5 6 a b
4 5 8 9 a
4 7 8 9 b
5 6 7 8 b
5 7 8 9 a
7 8 9 a b
)"},
        {"s3xs2_12", R"(# name: s3xs2_12
1 2 3 4 6 a
1 2 3 4 6 b
1 2 3 4 7 8
1 2 3 4 7 b
1 2 3 4 8 a
1 2 3 5 7 b
1 2 3 5 7 c
1 2 3 5 9 b
1 2 3 5 9 c
1 2 3 6 a b
1 2 3 7 8 c
1 2 3 8 a c
1 2 3 9 a b
1 2 3 9 a c
1 2 4 6 7 8
1 2 4 6 7 b
1 2 4 6 8 9
1 2 4 6 9 a
1 2 4 8 9 a
1 2 5 7 b c
1 2 5 9 b c
1 2 6 7 8 c
1 2 6 7 b c
1 2 6 8 9 c
1 2 6 9 a b
1 2 6 9 b c
1 2 8 9 a c
1 3 4 6 7 8
1 3 4 6 7 b
1 3 4 6 8 a
1 3 5 7 9 b
1 3 5 7 9 c
1 3 6 7 8 c
1 3 6 7 b c
1 3 6 8 a c
1 3 6 a b c
1 3 7 9 a b
1 3 7 9 a c
1 3 7 a b c
1 4 5 6 8 9
1 4 5 6 8 a
1 4 5 6 9 a
1 4 5 8 9 c
1 4 5 8 a c
1 4 5 9 a c
1 4 8 9 a c
1 5 6 8 9 b
1 5 6 8 a b
1 5 6 9 a b
1 5 7 9 a b
1 5 7 9 a c
1 5 7 a b c
1 5 8 9 b c
1 5 8 a b c
1 6 8 9 b c
1 6 8 a b c
2 3 4 5 6 a
2 3 4 5 6 c
2 3 4 5 8 a
2 3 4 5 8 b
2 3 4 5 b c
2 3 4 6 b c
2 3 4 7 8 b
2 3 5 6 7 8
2 3 5 6 7 c
2 3 5 6 8 a
2 3 5 7 8 b
2 3 5 9 b c
2 3 6 7 8 c
2 3 6 8 a c
2 3 6 a b c
2 3 9 a b c
2 4 5 6 7 a
2 4 5 6 7 c
2 4 5 7 8 a
2 4 5 7 8 b
2 4 5 7 b c
2 4 6 7 8 9
2 4 6 7 9 a
2 4 6 7 b c
2 4 7 8 9 a
2 5 6 7 8 a
2 6 7 8 9 a
2 6 8 9 a c
2 6 9 a b c
3 4 5 6 7 9
3 4 5 6 7 c
3 4 5 6 8 9
3 4 5 6 8 a
3 4 5 7 9 c
3 4 5 8 9 b
3 4 5 9 b c
3 4 6 7 8 9
3 4 6 7 b c
3 4 7 8 9 b
3 4 7 9 b c
3 5 6 7 8 9
3 5 7 8 9 b
3 7 9 a b c
4 5 6 7 9 a
4 5 7 8 a b
4 5 7 9 a c
4 5 7 a b c
4 5 8 9 b c
4 5 8 a b c
4 7 8 9 a b
4 7 9 a b c
4 8 9 a b c
5 6 7 8 9 a
5 6 8 9 a b
5 7 8 9 a b
6 8 9 a b c
)"},
    };
    return lists;
}

}  // namespace simplicia::detail
