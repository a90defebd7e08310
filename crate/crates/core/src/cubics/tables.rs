//! Aronhold invariants as integer tables over the ten coefficients of a ternary cubic.
//!
//! Coefficient `k` is that of the `k`-th cubic monomial in increasing deg-lex order:
//! `y1^3, y1^2 y2, y1^2 y3, y1 y2^2, y1 y2 y3, y1 y3^2, y2^3, y2^2 y3, y2 y3^2, y3^3`.
//! `S = (sum of S_TERMS) / S_DENOMINATOR`, and likewise for `T`.

pub(super) const S_DENOMINATOR: i64 = 1296;

pub(super) const T_DENOMINATOR: i64 = 5832;

pub(super) const S_TERMS: &[(i64, [usize; 4])] = &[
    (-1, [4, 4, 4, 4]),
    (8, [3, 4, 4, 5]),
    (-16, [3, 3, 5, 5]),
    (-24, [2, 4, 5, 6]),
    (8, [2, 4, 4, 7]),
    (16, [2, 3, 5, 7]),
    (-24, [2, 3, 4, 8]),
    (48, [2, 3, 3, 9]),
    (-16, [2, 2, 7, 7]),
    (48, [2, 2, 6, 8]),
    (48, [1, 5, 5, 6]),
    (-24, [1, 4, 5, 7]),
    (8, [1, 4, 4, 8]),
    (16, [1, 3, 5, 8]),
    (-24, [1, 3, 4, 9]),
    (16, [1, 2, 7, 8]),
    (-144, [1, 2, 6, 9]),
    (-16, [1, 1, 8, 8]),
    (48, [1, 1, 7, 9]),
    (48, [0, 5, 7, 7]),
    (-144, [0, 5, 6, 8]),
    (-24, [0, 4, 7, 8]),
    (216, [0, 4, 6, 9]),
    (48, [0, 3, 8, 8]),
    (-144, [0, 3, 7, 9]),
];

pub(super) const T_TERMS: &[(i64, [usize; 6])] = &[
    (-1, [4, 4, 4, 4, 4, 4]),
    (12, [3, 4, 4, 4, 4, 5]),
    (-48, [3, 3, 4, 4, 5, 5]),
    (64, [3, 3, 3, 5, 5, 5]),
    (-36, [2, 4, 4, 4, 5, 6]),
    (12, [2, 4, 4, 4, 4, 7]),
    (144, [2, 3, 4, 5, 5, 6]),
    (-24, [2, 3, 4, 4, 5, 7]),
    (-36, [2, 3, 4, 4, 4, 8]),
    (-96, [2, 3, 3, 5, 5, 7]),
    (144, [2, 3, 3, 4, 5, 8]),
    (72, [2, 3, 3, 4, 4, 9]),
    (-288, [2, 3, 3, 3, 5, 9]),
    (-216, [2, 2, 5, 5, 6, 6]),
    (144, [2, 2, 4, 5, 6, 7]),
    (-48, [2, 2, 4, 4, 7, 7]),
    (72, [2, 2, 4, 4, 6, 8]),
    (-96, [2, 2, 3, 5, 7, 7]),
    (144, [2, 2, 3, 5, 6, 8]),
    (144, [2, 2, 3, 4, 7, 8]),
    (-864, [2, 2, 3, 4, 6, 9]),
    (-216, [2, 2, 3, 3, 8, 8]),
    (576, [2, 2, 3, 3, 7, 9]),
    (64, [2, 2, 2, 7, 7, 7]),
    (-288, [2, 2, 2, 6, 7, 8]),
    (864, [2, 2, 2, 6, 6, 9]),
    (72, [1, 4, 4, 5, 5, 6]),
    (-36, [1, 4, 4, 4, 5, 7]),
    (12, [1, 4, 4, 4, 4, 8]),
    (-288, [1, 3, 5, 5, 5, 6]),
    (144, [1, 3, 4, 5, 5, 7]),
    (-24, [1, 3, 4, 4, 5, 8]),
    (-36, [1, 3, 4, 4, 4, 9]),
    (-96, [1, 3, 3, 5, 5, 8]),
    (144, [1, 3, 3, 4, 5, 9]),
    (144, [1, 2, 5, 5, 6, 7]),
    (144, [1, 2, 4, 5, 7, 7]),
    (-720, [1, 2, 4, 5, 6, 8]),
    (-24, [1, 2, 4, 4, 7, 8]),
    (648, [1, 2, 4, 4, 6, 9]),
    (-48, [1, 2, 3, 5, 7, 8]),
    (1296, [1, 2, 3, 5, 6, 9]),
    (144, [1, 2, 3, 4, 8, 8]),
    (-720, [1, 2, 3, 4, 7, 9]),
    (144, [1, 2, 3, 3, 8, 9]),
    (-96, [1, 2, 2, 7, 7, 8]),
    (576, [1, 2, 2, 6, 8, 8]),
    (-864, [1, 2, 2, 6, 7, 9]),
    (-216, [1, 1, 5, 5, 7, 7]),
    (576, [1, 1, 5, 5, 6, 8]),
    (144, [1, 1, 4, 5, 7, 8]),
    (-864, [1, 1, 4, 5, 6, 9]),
    (-48, [1, 1, 4, 4, 8, 8]),
    (72, [1, 1, 4, 4, 7, 9]),
    (-96, [1, 1, 3, 5, 8, 8]),
    (144, [1, 1, 3, 5, 7, 9]),
    (144, [1, 1, 3, 4, 8, 9]),
    (-216, [1, 1, 3, 3, 9, 9]),
    (-96, [1, 1, 2, 7, 8, 8]),
    (576, [1, 1, 2, 7, 7, 9]),
    (-864, [1, 1, 2, 6, 8, 9]),
    (64, [1, 1, 1, 8, 8, 8]),
    (-288, [1, 1, 1, 7, 8, 9]),
    (864, [1, 1, 1, 6, 9, 9]),
    (864, [0, 5, 5, 5, 6, 6]),
    (-864, [0, 4, 5, 5, 6, 7]),
    (72, [0, 4, 4, 5, 7, 7]),
    (648, [0, 4, 4, 5, 6, 8]),
    (-36, [0, 4, 4, 4, 7, 8]),
    (-540, [0, 4, 4, 4, 6, 9]),
    (576, [0, 3, 5, 5, 7, 7]),
    (-864, [0, 3, 5, 5, 6, 8]),
    (-720, [0, 3, 4, 5, 7, 8]),
    (1296, [0, 3, 4, 5, 6, 9]),
    (72, [0, 3, 4, 4, 8, 8]),
    (648, [0, 3, 4, 4, 7, 9]),
    (576, [0, 3, 3, 5, 8, 8]),
    (-864, [0, 3, 3, 5, 7, 9]),
    (-864, [0, 3, 3, 4, 8, 9]),
    (864, [0, 3, 3, 3, 9, 9]),
    (-288, [0, 2, 5, 7, 7, 7]),
    (1296, [0, 2, 5, 6, 7, 8]),
    (-3888, [0, 2, 5, 6, 6, 9]),
    (144, [0, 2, 4, 7, 7, 8]),
    (-864, [0, 2, 4, 6, 8, 8]),
    (1296, [0, 2, 4, 6, 7, 9]),
    (144, [0, 2, 3, 7, 8, 8]),
    (-864, [0, 2, 3, 7, 7, 9]),
    (1296, [0, 2, 3, 6, 8, 9]),
    (144, [0, 1, 5, 7, 7, 8]),
    (-864, [0, 1, 5, 6, 8, 8]),
    (1296, [0, 1, 5, 6, 7, 9]),
    (144, [0, 1, 4, 7, 8, 8]),
    (-864, [0, 1, 4, 7, 7, 9]),
    (1296, [0, 1, 4, 6, 8, 9]),
    (-288, [0, 1, 3, 8, 8, 8]),
    (1296, [0, 1, 3, 7, 8, 9]),
    (-3888, [0, 1, 3, 6, 9, 9]),
    (-216, [0, 0, 7, 7, 8, 8]),
    (864, [0, 0, 7, 7, 7, 9]),
    (864, [0, 0, 6, 8, 8, 8]),
    (-3888, [0, 0, 6, 7, 8, 9]),
    (5832, [0, 0, 6, 6, 9, 9]),
];
