// bundled.hpp -- embedded design data: disjoint triple-packing families
// (n=8..13 are artifact-generated and re-verified on load), the published
// n=5 and n=7 families, block arrays for the small doubly resolvable
// packings, and a resolution of the affine plane of order 3.

#pragma once

namespace mcwc::bundled {

// Five pairwise disjoint optimal 2-(5,3,1) packings partitioning all triples.
inline constexpr const char* triples_5 = R"raw(DESIGN v1 type=triples n=5 params=optimal_count=5
packing
0 1 4
2 3 4
packing
0 2 4
1 2 3
packing
0 3 4
0 1 2
packing
1 2 4
0 1 3
packing
1 3 4
0 2 3
)raw";

// Six pairwise disjoint 2-(7,3,1) packings partitioning all 35 triples;
// the first two are Steiner triple systems (the maximum possible).
inline constexpr const char* triples_7 = R"raw(DESIGN v1 type=triples n=7 params=optimal_count=2
packing
0 1 2
0 3 4
0 5 6
1 3 5
1 4 6
2 3 6
2 4 5
packing
0 1 3
0 2 6
0 4 5
1 2 4
1 5 6
2 3 5
3 4 6
packing
0 3 5
0 4 6
1 3 6
1 4 5
2 3 4
2 5 6
packing
0 1 4
0 2 5
0 3 6
1 2 3
2 4 6
3 4 5
packing
0 1 5
0 2 4
1 2 6
1 3 4
4 5 6
packing
0 1 6
0 2 3
1 2 5
3 5 6
)raw";

inline constexpr const char* triples_8 = R"raw(DESIGN v1 type=triples n=8 params=optimal_count=7
packing
0 1 2
0 4 6
0 5 7
1 3 6
1 4 5
2 3 5
2 6 7
3 4 7
packing
0 1 5
0 2 4
0 3 7
1 2 3
1 6 7
2 5 6
3 4 6
4 5 7
packing
0 2 7
0 3 6
0 4 5
1 2 6
1 3 5
1 4 7
2 3 4
5 6 7
packing
0 1 4
0 2 3
0 6 7
1 3 7
1 5 6
2 4 6
2 5 7
3 4 5
packing
0 1 7
0 2 6
0 3 5
1 2 5
1 3 4
2 4 7
3 6 7
4 5 6
packing
0 1 3
0 4 7
0 5 6
1 2 7
1 4 6
2 3 6
2 4 5
3 5 7
packing
0 1 6
0 2 5
0 3 4
1 2 4
1 5 7
2 3 7
3 5 6
4 6 7
)raw";

inline constexpr const char* triples_9 = R"raw(DESIGN v1 type=triples n=9 params=optimal_count=7
packing
0 1 2
0 3 8
0 4 6
0 5 7
1 3 6
1 4 5
1 7 8
2 3 5
2 4 8
2 6 7
3 4 7
5 6 8
packing
0 1 5
0 2 4
0 3 7
0 6 8
1 2 3
1 4 8
1 6 7
2 5 6
2 7 8
3 4 6
3 5 8
4 5 7
packing
0 1 8
0 2 7
0 3 6
0 4 5
1 2 6
1 3 5
1 4 7
2 3 4
2 5 8
3 7 8
4 6 8
5 6 7
packing
0 1 4
0 2 3
0 5 8
0 6 7
1 2 8
1 3 7
1 5 6
2 4 6
2 5 7
3 4 5
3 6 8
4 7 8
packing
0 1 7
0 2 6
0 3 5
0 4 8
1 2 5
1 3 4
1 6 8
2 3 8
2 4 7
3 6 7
4 5 6
5 7 8
packing
0 1 3
0 2 8
0 4 7
0 5 6
1 2 7
1 4 6
1 5 8
2 3 6
2 4 5
3 4 8
3 5 7
6 7 8
packing
0 1 6
0 2 5
0 3 4
0 7 8
1 2 4
1 3 8
1 5 7
2 3 7
2 6 8
3 5 6
4 5 8
4 6 7
)raw";

inline constexpr const char* triples_10 = R"raw(DESIGN v1 type=triples n=10 params=optimal_count=9
packing
0 1 2
0 3 5
0 6 7
0 8 9
1 4 5
1 6 8
2 3 6
2 4 7
2 5 9
3 4 8
3 7 9
4 6 9
5 7 8
packing
0 1 9
0 2 7
0 4 5
0 6 8
1 2 3
1 4 6
1 7 8
2 5 6
3 4 7
3 5 8
3 6 9
4 8 9
5 7 9
packing
0 1 7
0 2 8
0 4 6
0 5 9
1 2 9
1 3 8
1 5 6
2 3 4
2 5 7
3 6 7
4 5 8
4 7 9
6 8 9
packing
0 1 3
0 2 4
0 5 6
0 7 9
1 2 8
1 5 7
1 6 9
2 3 9
2 6 7
3 4 5
3 6 8
4 7 8
5 8 9
packing
0 2 3
0 4 7
0 5 8
0 6 9
1 2 4
1 3 5
1 6 7
1 8 9
2 6 8
2 7 9
3 4 9
3 7 8
4 5 6
packing
0 1 6
0 2 9
0 3 7
0 4 8
1 3 4
1 5 8
1 7 9
2 3 5
2 4 6
2 7 8
3 8 9
4 5 9
5 6 7
packing
0 1 5
0 2 6
0 3 8
0 4 9
1 2 7
1 3 9
1 4 8
2 4 5
2 8 9
3 4 6
3 5 7
5 6 9
6 7 8
packing
0 1 4
0 2 5
0 3 9
0 7 8
1 2 6
1 3 7
1 5 9
2 3 8
2 4 9
3 5 6
4 5 7
4 6 8
6 7 9
packing
0 1 8
0 3 4
0 5 7
1 2 5
1 3 6
1 4 9
2 3 7
2 4 8
2 6 9
3 5 9
4 6 7
5 6 8
7 8 9
packing
0 3 6
1 4 7
2 5 8
)raw";

inline constexpr const char* triples_11 = R"raw(DESIGN v1 type=triples n=11 params=optimal_count=9
packing
0 1 9
0 2 8
0 3 10
0 4 6
0 5 7
1 3 5
1 4 8
1 7 10
2 3 6
2 4 7
2 9 10
3 4 9
3 7 8
4 5 10
5 8 9
6 7 9
6 8 10
packing
0 1 6
0 4 7
0 5 8
0 9 10
1 2 9
1 3 8
1 4 10
1 5 7
2 3 4
2 5 6
2 8 10
3 5 10
3 6 9
4 5 9
4 6 8
6 7 10
7 8 9
packing
0 2 9
0 3 7
0 4 5
0 6 10
1 2 7
1 3 6
1 5 8
1 9 10
2 3 8
2 4 6
2 5 10
3 4 10
3 5 9
4 7 9
5 6 7
6 8 9
7 8 10
packing
0 1 8
0 2 4
0 3 5
0 6 9
0 7 10
1 2 5
1 4 9
1 6 10
2 3 10
2 6 8
2 7 9
3 4 7
3 8 9
4 5 6
4 8 10
5 7 8
5 9 10
packing
0 1 5
0 2 3
0 4 10
0 6 7
0 8 9
1 2 6
1 3 4
1 7 9
1 8 10
2 5 9
2 7 10
3 5 7
3 6 8
3 9 10
4 5 8
4 6 9
5 6 10
packing
0 1 4
0 2 7
0 3 9
0 8 10
1 2 3
1 5 10
1 6 9
1 7 8
2 4 5
2 6 10
2 8 9
3 4 8
3 5 6
3 7 10
4 6 7
4 9 10
5 7 9
packing
0 1 7
0 2 10
0 3 8
0 5 6
1 2 4
1 3 10
1 5 9
1 6 8
2 3 5
2 6 9
2 7 8
3 6 7
4 5 7
4 6 10
4 8 9
5 8 10
7 9 10
packing
0 1 10
0 2 5
0 3 4
0 6 8
0 7 9
1 2 8
1 3 7
1 4 6
2 3 9
2 4 10
2 6 7
3 5 8
3 6 10
4 7 8
5 6 9
5 7 10
8 9 10
packing
0 1 3
0 2 6
0 4 9
0 5 10
0 7 8
1 2 10
1 4 5
1 6 7
1 8 9
2 4 8
2 5 7
3 4 6
3 7 9
3 8 10
4 7 10
5 6 8
6 9 10
packing
0 1 2
0 3 6
0 4 8
0 5 9
1 3 9
1 4 7
1 5 6
2 3 7
2 4 9
2 5 8
3 4 5
6 7 8
)raw";

inline constexpr const char* triples_12 = R"raw(DESIGN v1 type=triples n=12 params=optimal_count=11
packing
0 1 2
0 4 10
0 5 7
0 6 11
0 8 9
1 3 10
1 4 6
1 5 11
1 7 9
2 3 11
2 5 9
2 6 8
2 7 10
3 4 9
3 5 6
3 7 8
4 5 8
4 7 11
6 9 10
8 10 11
packing
0 1 5
0 2 4
0 3 8
0 7 10
0 9 11
1 2 3
1 6 8
1 7 11
1 9 10
2 5 7
2 6 11
2 8 10
3 4 11
3 6 10
3 7 9
4 5 10
4 6 7
4 8 9
5 6 9
5 8 11
packing
0 1 8
0 2 10
0 3 9
0 4 7
0 5 6
1 2 6
1 3 5
1 4 9
1 10 11
2 3 4
2 7 9
2 8 11
3 6 8
3 7 11
4 5 11
4 8 10
5 7 8
5 9 10
6 7 10
6 9 11
packing
0 1 3
0 2 11
0 5 9
0 6 10
0 7 8
1 2 9
1 4 10
1 5 8
1 6 7
2 3 7
2 4 6
2 5 10
3 4 5
3 8 10
3 9 11
4 7 9
4 8 11
5 6 11
6 8 9
7 10 11
packing
0 1 7
0 2 5
0 3 6
0 4 9
0 8 11
1 2 4
1 3 11
1 6 10
1 8 9
2 3 10
2 6 9
2 7 8
3 4 8
3 5 7
4 5 6
4 10 11
5 8 10
5 9 11
6 7 11
7 9 10
packing
0 2 7
0 3 4
0 5 11
0 6 9
0 8 10
1 2 8
1 3 6
1 4 7
1 5 10
1 9 11
2 3 5
2 4 11
2 9 10
3 7 10
3 8 9
4 5 9
4 6 8
5 6 7
6 10 11
7 8 11
packing
0 1 9
0 2 6
0 3 10
0 4 8
0 7 11
1 3 8
1 4 5
1 6 11
1 7 10
2 3 9
2 4 7
2 5 8
2 10 11
3 4 6
3 5 11
4 9 10
5 6 10
5 7 9
6 7 8
8 9 11
packing
0 1 4
0 2 8
0 3 11
0 5 10
0 6 7
1 2 10
1 3 7
1 5 9
1 8 11
2 4 9
2 5 6
2 7 11
3 4 10
3 5 8
3 6 9
4 5 7
4 6 11
6 8 10
7 8 9
9 10 11
packing
0 1 6
0 2 3
0 4 5
0 7 9
0 10 11
1 2 5
1 3 9
1 4 11
1 7 8
2 4 8
2 6 10
2 9 11
3 5 10
3 6 7
3 8 11
4 6 9
4 7 10
5 6 8
5 7 11
8 9 10
packing
0 1 11
0 3 7
0 4 6
0 5 8
0 9 10
1 2 7
1 3 4
1 5 6
1 8 10
2 3 6
2 4 10
2 5 11
2 8 9
3 5 9
3 10 11
4 7 8
4 9 11
5 7 10
6 7 9
6 8 11
packing
0 1 10
0 2 9
0 3 5
0 4 11
0 6 8
1 2 11
1 4 8
1 5 7
1 6 9
2 3 8
2 4 5
2 6 7
3 4 7
3 6 11
3 9 10
4 6 10
5 8 9
5 10 11
7 8 10
7 9 11
)raw";

inline constexpr const char* triples_13 = R"raw(DESIGN v1 type=triples n=13 params=optimal_count=11
packing
0 1 2
0 3 12
0 4 10
0 5 7
0 6 11
0 8 9
1 3 10
1 4 6
1 5 11
1 7 9
1 8 12
2 3 11
2 4 12
2 5 9
2 6 8
2 7 10
3 4 9
3 5 6
3 7 8
4 5 8
4 7 11
5 10 12
6 7 12
6 9 10
8 10 11
9 11 12
packing
0 1 5
0 2 4
0 3 8
0 6 12
0 7 10
0 9 11
1 2 3
1 4 12
1 6 8
1 7 11
1 9 10
2 5 7
2 6 11
2 8 10
2 9 12
3 4 11
3 5 12
3 6 10
3 7 9
4 5 10
4 6 7
4 8 9
5 6 9
5 8 11
7 8 12
10 11 12
packing
0 1 8
0 2 10
0 3 9
0 4 7
0 5 6
0 11 12
1 2 6
1 3 5
1 4 9
1 7 12
1 10 11
2 3 4
2 5 12
2 7 9
2 8 11
3 6 8
3 7 11
3 10 12
4 5 11
4 6 12
4 8 10
5 7 8
5 9 10
6 7 10
6 9 11
8 9 12
packing
0 1 3
0 2 11
0 4 12
0 5 9
0 6 10
0 7 8
1 2 9
1 4 10
1 5 8
1 6 7
1 11 12
2 3 7
2 4 6
2 5 10
2 8 12
3 4 5
3 6 12
3 8 10
3 9 11
4 7 9
4 8 11
5 6 11
5 7 12
6 8 9
7 10 11
9 10 12
packing
0 1 7
0 2 5
0 3 6
0 4 9
0 8 11
0 10 12
1 2 4
1 3 11
1 5 12
1 6 10
1 8 9
2 3 10
2 6 9
2 7 8
2 11 12
3 4 8
3 5 7
3 9 12
4 5 6
4 7 12
4 10 11
5 8 10
5 9 11
6 7 11
6 8 12
7 9 10
packing
0 1 12
0 2 7
0 3 4
0 5 11
0 6 9
0 8 10
1 2 8
1 3 6
1 4 7
1 5 10
1 9 11
2 3 5
2 4 11
2 6 12
2 9 10
3 7 10
3 8 9
3 11 12
4 5 9
4 6 8
4 10 12
5 6 7
5 8 12
6 10 11
7 8 11
7 9 12
packing
0 1 9
0 2 6
0 3 10
0 4 8
0 5 12
0 7 11
1 2 12
1 3 8
1 4 5
1 6 11
1 7 10
2 3 9
2 4 7
2 5 8
2 10 11
3 4 6
3 5 11
3 7 12
4 9 10
4 11 12
5 6 10
5 7 9
6 7 8
6 9 12
8 9 11
8 10 12
packing
0 1 4
0 2 8
0 3 11
0 5 10
0 6 7
0 9 12
1 2 10
1 3 7
1 5 9
1 6 12
1 8 11
2 3 12
2 4 9
2 5 6
2 7 11
3 4 10
3 5 8
3 6 9
4 5 7
4 6 11
4 8 12
5 11 12
6 8 10
7 8 9
7 10 12
9 10 11
packing
0 1 6
0 2 3
0 4 5
0 7 9
0 8 12
0 10 11
1 2 5
1 3 9
1 4 11
1 7 8
1 10 12
2 4 8
2 6 10
2 7 12
2 9 11
3 4 12
3 5 10
3 6 7
3 8 11
4 6 9
4 7 10
5 6 8
5 7 11
5 9 12
6 11 12
8 9 10
packing
0 1 11
0 2 12
0 3 7
0 4 6
0 5 8
0 9 10
1 2 7
1 3 4
1 5 6
1 8 10
1 9 12
2 3 6
2 4 10
2 5 11
2 8 9
3 5 9
3 8 12
3 10 11
4 5 12
4 7 8
4 9 11
5 7 10
6 7 9
6 8 11
6 10 12
7 11 12
packing
0 1 10
0 2 9
0 3 5
0 4 11
0 6 8
0 7 12
1 2 11
1 3 12
1 4 8
1 5 7
1 6 9
2 3 8
2 4 5
2 6 7
2 10 12
3 4 7
3 6 11
3 9 10
4 6 10
4 9 12
5 6 12
5 8 9
5 10 11
7 8 10
7 9 11
8 11 12
)raw";

// A resolution of the affine plane of order 3: BIBD(9,3,1) with four
// parallel classes (alpha = 1).
inline constexpr const char* resolvable_9_3_1 = R"raw(DESIGN v1 type=resolvable n=9 params=k=3,lambda=1,alpha=1
class
0 1 2
3 4 5
6 7 8
class
0 3 6
1 4 7
2 5 8
class
0 4 8
1 5 6
2 3 7
class
0 5 7
1 3 8
2 4 6
)raw";

// Small doubly resolvable packings, one row per line, cells separated by
// spaces, each cell a digit string of points ('-' would mean empty).
// DRP(3,3;2,2;3,3):
inline constexpr const char* drp_3x3 = R"raw(
01 12 02
02 01 12
12 02 01
)raw";

// DRP(4,2;2,2;6,6):
inline constexpr const char* drp_6x6 = R"raw(
01 23 0 1 2 3
23 01 3 0 1 2
2 3 02 13 0 1
1 2 13 02 3 0
0 1 2 3 03 12
3 0 1 2 12 03
)raw";

// DRP(6,2;2,2;9,9):
inline constexpr const char* drp_9x9 = R"raw(
01 45 12 2 3 0 3 5 4
25 13 04 3 0 1 4 2 5
34 02 35 0 1 2 5 4 1
4 5 5 03 14 03 2 1 2
3 4 2 15 05 24 1 3 0
5 1 4 24 23 15 0 0 3
0 2 3 5 4 3 01 45 12
1 3 0 4 2 5 25 13 04
2 0 1 1 5 4 34 02 35
)raw";

}  // namespace mcwc::bundled
