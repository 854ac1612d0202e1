//! Published values used as regression targets. Traces are compared against point
//! counts; basepoints are rounded to four decimals.

/// `(p, a_p)` for `y^2 = x^3 + 8x`.
#[rustfmt::skip]
pub const AP_256B2: [(u64, i64); 14] = [
    (3, 0), (5, -4), (7, 0), (11, 0), (13, -4), (17, -2), (19, 0),
    (23, 0), (29, -4), (31, 0), (37, 12), (41, -10), (43, 0), (47, 0),
];

/// `(p, a_p(y^2 = x^3 - x), a_p(y^2 = x^3 - 6x))` for the first 50 primes.
#[rustfmt::skip]
pub const AP_DUALITY: [(u64, i64, i64); 50] = [
    (2, 0, 0), (3, 0, 0), (5, -2, 2), (7, 0, 0), (11, 0, 0), (13, 6, -6), (17, 2, -2), (19, 0, 0),
    (23, 0, 0), (29, -10, 10), (31, 0, 0), (37, -2, 2), (41, 10, -10), (43, 0, 0), (47, 0, 0),
    (53, 14, -14), (59, 0, 0), (61, -10, 10), (67, 0, 0), (71, 0, 0), (73, 6, -6), (79, 0, 0),
    (83, 0, 0), (89, 10, -10), (97, 18, -18), (101, 2, -2), (103, 0, 0), (107, 0, 0), (109, -6, 6),
    (113, -14, 14), (127, 0, 0), (131, 0, 0), (137, -22, 22), (139, 0, 0), (149, -10, 10),
    (151, 0, 0), (157, -14, 14), (163, 0, 0), (167, 0, 0), (173, -2, 2), (179, 0, 0),
    (181, 26, -26), (191, 0, 0), (193, -14, 14), (197, -26, 26), (199, 0, 0), (211, 0, 0),
    (223, 0, 0), (227, 0, 0), (229, 10, -10),
];

/// A printed matching row: prime, trace and `u_p^2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MatchRow {
    pub p: u64,
    pub a_p: i64,
    pub u_sq: f64,
}

const fn row(p: u64, a_p: i64, u_sq: f64) -> MatchRow {
    MatchRow { p, a_p, u_sq }
}

/// `j = 0` curve `y^2 + y = x^3` on the pencil `(-9, -1, 20.35)`.
pub const CM_D3_PENCIL: [&str; 3] = ["-9", "-1", "20.35"];
#[rustfmt::skip]
pub const CM_D3_ROWS: [MatchRow; 10] = [
    row(2, 0, -5.9724), row(5, 0, -4.8807), row(7, -1, -4.7202), row(11, 0, -4.4729), row(13, 5, -4.0880),
    row(17, 0, -4.3518), row(19, -7, -4.3839), row(23, 0, -4.2937), row(29, 0, -4.2596), row(31, -4, -4.2999),
];

/// Non-CM curve 389a1 on the fitted pencil `(-1.55, -7.25, -9.82)`.
pub const PENCIL_389A1: [&str; 3] = ["-1.55", "-7.25", "-9.82"];
#[rustfmt::skip]
pub const ROWS_389A1: [MatchRow; 10] = [
    row(3, 1, -0.4549), row(5, 0, -0.4895), row(7, 0, -0.4219), row(11, -1, -0.4470), row(13, 3, -0.2770),
    row(17, 5, -0.2357), row(19, 0, -0.3884), row(23, 7, -0.2245), row(29, 0, -0.3818), row(31, -5, -0.2602),
];

/// Tolerance on printed `u_p^2` (the pencil parameters are rounded).
pub const USQ_TOL: f64 = 2e-2;
