//! Table rows for nilradicals of dimension 3 to 6, transcribed from the bracket
//! columns. `{a}`, `{1/a}` and `{-1/a}` are filled in from the row's
//! parameter before parsing.

use super::ExpectedSymplectic::{self, DimensionNotEven as Odd, Never, Yes};

pub struct Row {
    pub name: &'static str,
    pub body: &'static str,
    pub symplectic: ExpectedSymplectic,
    pub maximal_rank: bool,
    /// Printed non-degeneracy conditions, in the printed variables.
    pub conditions: &'static [&'static str],
    /// Number of free parameters in the printed general cocycle.
    pub parameter_count: Option<usize>,
    /// Default for the row parameter `a` as (numerator, denominator).
    pub default_a: Option<(i64, i64)>,
    pub corrections: &'static [(Option<&'static str>, Option<&'static str>)],
}

const fn row(name: &'static str, body: &'static str, symplectic: ExpectedSymplectic, maximal_rank: bool) -> Row {
    Row {
        name,
        body,
        symplectic,
        maximal_rank,
        conditions: &[],
        parameter_count: None,
        default_a: None,
        corrections: &[],
    }
}

pub static ROWS: &[Row] = &[
    Row {
        corrections: &[(None, Some("[e4,e3] = 2*e3"))],
        ..row(
            "n3_1",
            "basis e1 e2 e3
[e1,e2] = e3
torus e4 e5
[e4,e1] = e1
[e4,e2] = e2
[e4,e3] = 2*e3
[e5,e2] = e2
[e5,e3] = e3",
            Odd,
            true,
        )
    },
    Row {
        conditions: &["a2_4", "2*a3_5*a2_4 - a3_4^2"],
        parameter_count: Some(5),
        ..row(
            "n4_1",
            "basis e1 e2 e3 e4
[e2,e4] = e1
[e3,e4] = e2
torus e5 e6
[e5,e1] = e1
[e5,e3] = -e3
[e5,e4] = e4
[e6,e2] = e2
[e6,e3] = 2*e3
[e6,e4] = -e4",
            Yes,
            true,
        )
    },
    Row {
        conditions: &["a4_5", "a3_5", "a3_5*a4_8 - a3_8*a4_5"],
        parameter_count: Some(8),
        ..row(
            "n5_1",
            "basis e1 e2 e3 e4 e5
[e3,e5] = e1
[e4,e5] = e2
torus e6 e7 e8
[e6,e1] = e1
[e6,e4] = -e4
[e6,e5] = e5
[e7,e2] = e2
[e7,e4] = e4
[e8,e3] = e3
[e8,e4] = e4
[e8,e5] = -e5",
            Yes,
            true,
        )
    },
    Row {
        corrections: &[(Some("[e6,e3] = -3*e3"), Some("[e6,e3] = -e3"))],
        ..row(
            "n5_2",
            "basis e1 e2 e3 e4 e5
[e2,e5] = e1
[e3,e5] = e2
[e4,e5] = e3
torus e6 e7
[e6,e1] = e1
[e6,e3] = -e3
[e6,e4] = -2*e4
[e6,e5] = e5
[e7,e2] = e2
[e7,e3] = 2*e3
[e7,e4] = 3*e4
[e7,e5] = -e5",
            Odd,
            true,
        )
    },
    row(
        "n5_3",
        "basis e1 e2 e3 e4 e5
[e3,e4] = e2
[e3,e5] = e1
[e4,e5] = e3
torus e6 e7
[e6,e1] = e1
[e6,e3] = 1/3*e3
[e6,e4] = -1/3*e4
[e6,e5] = 2/3*e5
[e7,e2] = e2
[e7,e3] = 1/3*e3
[e7,e4] = 2/3*e4
[e7,e5] = -1/3*e5",
        Odd,
        true,
    ),
    Row {
        conditions: &["a7_8", "a3_5"],
        parameter_count: Some(8),
        ..row(
            "n5_4",
            "basis e1 e2 e3 e4 e5
[e2,e4] = e1
[e3,e5] = e1
torus e6 e7 e8
[e6,e1] = e1
[e6,e4] = e4
[e6,e5] = e5
[e7,e3] = e3
[e7,e5] = -e5
[e8,e2] = e2
[e8,e4] = -e4",
            Yes,
            false,
        )
    },
    row(
        "n5_5",
        "basis e1 e2 e3 e4 e5
[e2,e5] = e1
[e3,e4] = e1
[e3,e5] = e2
torus e6 e7
[e6,e1] = e1
[e6,e3] = -e3
[e6,e4] = 2*e4
[e6,e5] = e5
[e7,e2] = e2
[e7,e3] = 2*e3
[e7,e4] = -2*e4
[e7,e5] = -e5",
        Odd,
        false,
    ),
    Row {
        conditions: &["a3_4"],
        parameter_count: Some(5),
        ..row(
            "n5_6",
            "basis e1 e2 e3 e4 e5
[e2,e5] = e1
[e3,e4] = e1
[e3,e5] = e2
[e4,e5] = e3
torus e6
[e6,e1] = e1
[e6,e2] = 4/5*e2
[e6,e3] = 3/5*e3
[e6,e4] = 2/5*e4
[e6,e5] = 1/5*e5",
            Yes,
            false,
        )
    },
    row(
        "n6_1",
        "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3
[e1,e3] = e4
[e1,e5] = e6
torus e7 e8 e9
[e7,e1] = e1
[e7,e3] = e3
[e7,e4] = 2*e4
[e7,e6] = e6
[e8,e2] = e2
[e8,e3] = e3
[e8,e4] = e4
[e9,e5] = e5
[e9,e6] = e6",
        Odd,
        true,
    ),
    row(
        "n6_2",
        "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3
[e1,e3] = e4
[e1,e4] = e5
[e1,e5] = e6
torus e7 e8
[e7,e1] = e1
[e7,e3] = e3
[e7,e4] = 2*e4
[e7,e5] = 3*e5
[e7,e6] = 4*e6
[e8,e2] = e2
[e8,e3] = e3
[e8,e4] = e4
[e8,e5] = e5
[e8,e6] = e6",
        Never,
        true,
    ),
    row(
        "n6_3",
        "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e6
[e1,e3] = e4
[e2,e3] = e5
torus e7 e8 e9
[e7,e1] = e1
[e7,e4] = e4
[e7,e6] = e6
[e8,e2] = e2
[e8,e5] = e5
[e8,e6] = e6
[e9,e3] = e3
[e9,e4] = e4
[e9,e5] = e5",
        Odd,
        true,
    ),
    row(
        "n6_4",
        "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e5
[e1,e3] = e6
[e2,e4] = e6
torus e7 e8 e9
[e7,e1] = e1
[e7,e4] = e4
[e7,e5] = e5
[e7,e6] = e6
[e8,e2] = e2
[e8,e4] = -e4
[e8,e5] = e5
[e9,e3] = e3
[e9,e4] = e4
[e9,e6] = e6",
        Odd,
        false,
    ),
    Row {
        conditions: &["a", "a6_8^2 - a6_9^2", "a*a7_8 + a*a8_9 - a7_10 - a9_10"],
        parameter_count: Some(12),
        default_a: Some((2, 1)),
        ..row(
            "n6_5",
            "basis e1 e2 e3 e4 e5 e6
[e1,e3] = e5
[e1,e4] = e6
[e2,e3] = {a}*e6
[e2,e4] = e5
torus e7 e8 e9 e10
[e7,e1] = e1
[e7,e2] = e2
[e7,e5] = e5
[e7,e6] = e6
[e8,e1] = {1/a}*e2
[e8,e2] = e1
[e8,e5] = e6
[e8,e6] = {1/a}*e5
[e9,e3] = e3
[e9,e4] = e4
[e9,e5] = e5
[e9,e6] = e6
[e10,e3] = {a}*e4
[e10,e4] = e3
[e10,e5] = {a}*e6
[e10,e6] = e5",
            Yes,
            true,
        )
    },
    Row {
        conditions: &["a6_7", "a5_8"],
        parameter_count: Some(7),
        ..row(
            "n6_6",
            "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e6
[e1,e3] = e4
[e1,e4] = e5
[e2,e3] = e5
torus e7 e8
[e7,e1] = e1
[e7,e2] = 2*e2
[e7,e4] = e4
[e7,e5] = 2*e5
[e7,e6] = 3*e6
[e8,e3] = e3
[e8,e4] = e4
[e8,e5] = e5",
            Yes,
            false,
        )
    },
    row(
        "n6_7",
        "basis e1 e2 e3 e4 e5 e6
[e1,e3] = e4
[e1,e4] = e5
[e2,e3] = e6
torus e7 e8 e9
[e7,e1] = e1
[e7,e4] = e4
[e7,e5] = 2*e5
[e8,e2] = e2
[e8,e6] = e6
[e9,e3] = e3
[e9,e4] = e4
[e9,e5] = e5
[e9,e6] = e6",
        Odd,
        true,
    ),
    Row {
        conditions: &["a6_8", "a4_8"],
        parameter_count: Some(7),
        ..row(
            "n6_8",
            "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3 + e5
[e1,e3] = e4
[e2,e5] = e6
torus e7 e8
[e7,e1] = e1
[e7,e3] = e3
[e7,e4] = 2*e4
[e7,e5] = e5
[e7,e6] = e6
[e8,e2] = e2
[e8,e3] = e3
[e8,e4] = e4
[e8,e5] = e5
[e8,e6] = 2*e6",
            Yes,
            false,
        )
    },
    Row {
        conditions: &["a6_8", "a4_8"],
        parameter_count: Some(7),
        ..row(
            "n6_9",
            "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3
[e1,e3] = e4
[e1,e5] = e6
[e2,e3] = e6
torus e7 e8
[e7,e1] = e1
[e7,e3] = e3
[e7,e4] = 2*e4
[e7,e6] = e6
[e8,e2] = e2
[e8,e3] = e3
[e8,e4] = e4
[e8,e5] = 2*e5
[e8,e6] = 2*e6",
            Yes,
            false,
        )
    },
    Row {
        conditions: &["a", "a*a6_8^2 - a5_8^2"],
        parameter_count: Some(7),
        default_a: Some((2, 1)),
        corrections: &[(Some("[e7,e3] = 2*e2"), Some("[e7,e3] = 2*e3"))],
        ..row(
            "n6_10",
            "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3
[e1,e3] = e5
[e1,e4] = e6
[e2,e3] = {a}*e6
[e2,e4] = e5
torus e7 e8
[e7,e1] = e1
[e7,e2] = e2
[e7,e3] = 2*e3
[e7,e4] = 2*e4
[e7,e5] = 3*e5
[e7,e6] = 3*e6
[e8,e1] = {1/a}*e2
[e8,e2] = e1
[e8,e5] = e6
[e8,e6] = {1/a}*e5",
            Yes,
            false,
        )
    },
    Row {
        conditions: &["a5_8", "a6_8"],
        parameter_count: Some(7),
        ..row(
            "n6_11",
            "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3
[e1,e3] = e4
[e1,e4] = e5
[e2,e3] = e6
torus e7 e8
[e7,e1] = e1
[e7,e3] = e3
[e7,e4] = 2*e4
[e7,e5] = 3*e5
[e7,e6] = e6
[e8,e2] = e2
[e8,e3] = e3
[e8,e4] = e4
[e8,e5] = e5
[e8,e6] = 2*e6",
            Yes,
            true,
        )
    },
    row(
        "n6_12",
        "basis e1 e2 e3 e4 e5 e6
[e1,e3] = e4
[e1,e4] = e6
[e2,e5] = e6
torus e7 e8 e9
[e7,e1] = e1
[e7,e4] = e4
[e7,e5] = 2*e5
[e7,e6] = 2*e6
[e8,e2] = e2
[e8,e5] = -e5
[e9,e3] = e3
[e9,e4] = e4
[e9,e5] = e5
[e9,e6] = e6",
        Odd,
        false,
    ),
    Row {
        conditions: &["a6_8", "a3_8*a6_8 - a4_8^2"],
        parameter_count: Some(7),
        ..row(
            "n6_13",
            "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e5
[e1,e3] = e4
[e1,e4] = e6
[e2,e5] = e6
torus e7 e8
[e7,e1] = e1
[e7,e3] = -e3
[e7,e5] = e5
[e7,e6] = e6
[e8,e2] = e2
[e8,e3] = 2*e3
[e8,e4] = 2*e4
[e8,e5] = e5
[e8,e6] = 2*e6",
            Yes,
            false,
        )
    },
    Row {
        default_a: Some((1, 1)),
        ..row(
            "n6_14",
            "basis e1 e2 e3 e4 e5 e6
[e1,e3] = e4
[e1,e4] = e6
[e2,e3] = e5
[e2,e5] = {a}*e6
torus e7 e8 e9
[e7,e1] = e1
[e7,e2] = e2
[e7,e4] = e4
[e7,e5] = e5
[e7,e6] = 2*e6
[e8,e1] = {-1/a}*e2
[e8,e2] = e1
[e8,e4] = {-1/a}*e5
[e8,e5] = e4
[e9,e3] = e3
[e9,e4] = e4
[e9,e5] = e5
[e9,e6] = e6",
            Odd,
            true,
        )
    },
    row(
        "n6_15",
        "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3 + e5
[e1,e3] = e4
[e1,e4] = e6
[e2,e5] = e6
torus e7
[e7,e1] = e1
[e7,e2] = 2*e2
[e7,e3] = 3*e3
[e7,e4] = 4*e4
[e7,e5] = 3*e5
[e7,e6] = 5*e6",
        Odd,
        false,
    ),
    Row {
        conditions: &["a6_8", "3*a3_8*a6_8^2 - 3*a4_8*a5_8*a6_8 - a5_8^3"],
        parameter_count: Some(7),
        ..row(
            "n6_16",
            "basis e1 e2 e3 e4 e5 e6
[e1,e3] = e4
[e1,e4] = e5
[e1,e5] = e6
[e2,e3] = e5
[e2,e4] = e6
torus e7 e8
[e7,e1] = e1
[e7,e2] = 2*e2
[e7,e4] = e4
[e7,e5] = 2*e5
[e7,e6] = 3*e6
[e8,e3] = e3
[e8,e4] = e4
[e8,e5] = e5
[e8,e6] = e6",
            Yes,
            false,
        )
    },
    Row {
        conditions: &["a6_8", "2*a3_8*a6_8 - a4_8"],
        parameter_count: Some(7),
        ..row(
            "n6_17",
            "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3
[e1,e3] = e4
[e1,e4] = e6
[e2,e5] = e6
torus e7 e8
[e7,e1] = e1
[e7,e3] = e3
[e7,e4] = 2*e4
[e7,e5] = 3*e5
[e7,e6] = 3*e6
[e8,e2] = e2
[e8,e3] = e3
[e8,e4] = e4
[e8,e6] = e6",
            Yes,
            false,
        )
    },
    Row {
        default_a: Some((1, 1)),
        ..row(
            "n6_18",
            "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3
[e1,e3] = e4
[e1,e4] = e6
[e2,e3] = e5
[e2,e5] = {a}*e6
torus e7 e8
[e7,e1] = e1
[e7,e2] = e2
[e7,e3] = 2*e3
[e7,e4] = 3*e4
[e7,e5] = 3*e5
[e7,e6] = 4*e6
[e8,e1] = {-1/a}*e2
[e8,e2] = e1
[e8,e4] = {-1/a}*e5
[e8,e5] = e4",
            Never,
            true,
        )
    },
    row(
        "n6_19",
        "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3
[e1,e3] = e4
[e1,e4] = e5
[e1,e5] = e6
[e2,e3] = e6
torus e7
[e7,e1] = e1
[e7,e2] = 3*e2
[e7,e3] = 4*e3
[e7,e4] = 5*e4
[e7,e5] = 6*e5
[e7,e6] = 7*e6",
        Odd,
        false,
    ),
    row(
        "n6_20",
        "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3
[e1,e3] = e4
[e1,e4] = e5
[e1,e5] = e6
[e2,e3] = e5
[e2,e4] = e6
torus e7
[e7,e1] = e1
[e7,e2] = 2*e2
[e7,e3] = 3*e3
[e7,e4] = 4*e4
[e7,e5] = 5*e5
[e7,e6] = 6*e6",
        Odd,
        false,
    ),
    Row {
        conditions: &["a2_8*a6_8 - 8*a3_8*a5_8 - 3*a4_8^2", "a6_8"],
        parameter_count: Some(7),
        ..row(
            "n6_21",
            "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3
[e1,e5] = e6
[e2,e3] = e4
[e2,e4] = e5
[e3,e4] = e6
torus e7 e8
[e7,e1] = e1
[e7,e3] = e3
[e7,e4] = e4
[e7,e5] = e5
[e7,e6] = 2*e6
[e8,e2] = e2
[e8,e3] = e3
[e8,e4] = 2*e4
[e8,e5] = 3*e5
[e8,e6] = 3*e6",
            Yes,
            false,
        )
    },
    row(
        "n6_22",
        "basis e1 e2 e3 e4 e5 e6
[e1,e2] = e3
[e1,e3] = e5
[e1,e5] = e6
[e2,e3] = e4
[e2,e4] = e5
[e3,e4] = e6
torus e7
[e7,e1] = e1
[e7,e2] = 1/2*e2
[e7,e3] = 3/2*e3
[e7,e4] = 2*e4
[e7,e5] = 5/2*e5
[e7,e6] = 7/2*e6",
        Odd,
        false,
    ),
];
