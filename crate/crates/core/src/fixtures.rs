//! Published reference values: the Gray table of R_3 = F_3[u]/<u^3> with
//! λ = 2+u+2u^2, and the optimal codes obtained from both example rings.

/// One printed row of the R_3 Gray table.
#[derive(Clone, Copy, Debug)]
pub struct GrayRow {
    pub element: &'static str,
    pub vector: [u32; 3],
    pub weight: usize,
    /// Set on rows whose printed vector is suspect.
    pub flag: Option<&'static str>,
}

const DUPLICATE: &str =
    "shares printed vector (0,2,2) with 2u^2+u+2; this row recomputes as printed";
const TYPO: &str = "printed vector (0,2,2) is a typo; recomputed (0,0,2), weight 1 as printed";

pub const GRAY_TABLE: [GrayRow; 27] = [
    row("0", [0, 0, 0], 0),
    row("u^2", [1, 2, 1], 3),
    row("2u^2", [2, 1, 2], 3),
    row("u", [1, 1, 0], 2),
    row("u^2+u", [2, 0, 1], 2),
    flagged("2u^2+u", [0, 2, 2], 2, DUPLICATE),
    row("2u", [2, 2, 0], 2),
    row("u^2+2u", [0, 1, 1], 2),
    row("2u^2+2u", [1, 0, 2], 2),
    row("1", [0, 2, 0], 1),
    row("u^2+1", [1, 1, 1], 3),
    row("2u^2+1", [2, 0, 2], 2),
    row("u+1", [1, 0, 0], 1),
    row("u^2+u+1", [2, 2, 1], 3),
    row("2u^2+u+1", [0, 1, 2], 2),
    row("2u+1", [2, 1, 0], 2),
    row("u^2+2u+1", [0, 0, 1], 1),
    row("2u^2+2u+1", [1, 2, 2], 3),
    row("2", [0, 1, 0], 1),
    row("u^2+2", [1, 0, 1], 2),
    row("2u^2+2", [2, 2, 2], 3),
    row("u+2", [1, 2, 0], 2),
    row("u^2+u+2", [2, 1, 1], 3),
    flagged("2u^2+u+2", [0, 2, 2], 1, TYPO),
    row("2u+2", [2, 0, 0], 1),
    row("u^2+2u+2", [0, 2, 1], 2),
    row("2u^2+2u+2", [1, 1, 2], 3),
];

const fn row(element: &'static str, vector: [u32; 3], weight: usize) -> GrayRow {
    GrayRow {
        element,
        vector,
        weight,
        flag: None,
    }
}

const fn flagged(
    element: &'static str,
    vector: [u32; 3],
    weight: usize,
    why: &'static str,
) -> GrayRow {
    GrayRow {
        element,
        vector,
        weight,
        flag: Some(why),
    }
}

pub fn gray_row(element: &str) -> Option<&'static GrayRow> {
    GRAY_TABLE.iter().find(|r| r.element == element)
}

/// Ring parameters for one of the two worked examples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExampleRing {
    pub p: u32,
    pub k: usize,
    pub lambda: &'static str,
}

pub const R3: ExampleRing = ExampleRing {
    p: 3,
    k: 3,
    lambda: "2,1,2",
};

pub const R4: ExampleRing = ExampleRing {
    p: 5,
    k: 4,
    lambda: "2,1,2,4",
};

/// An optimal code [n, k, d] with its generator exponents.
#[derive(Clone, Copy, Debug)]
pub struct CodeRow {
    pub ring: ExampleRing,
    pub len: usize,
    pub label: &'static str,
    /// Exponents as printed.
    pub printed: &'static [u32],
    /// Exponents that actually give the printed parameters.
    pub exponents: &'static [u32],
    pub params: (usize, usize, usize),
}

const fn code(
    ring: ExampleRing,
    len: usize,
    label: &'static str,
    exponents: &'static [u32],
    params: (usize, usize, usize),
) -> CodeRow {
    CodeRow {
        ring,
        len,
        label,
        printed: exponents,
        exponents,
        params,
    }
}

pub const OPTIMAL_CODES: [CodeRow; 17] = [
    code(R3, 4, "f2", &[0, 1], (12, 10, 2)),
    code(R3, 4, "f1", &[1, 0], (12, 10, 2)),
    code(R3, 4, "f2^2", &[0, 2], (12, 8, 3)),
    code(R3, 4, "f1^2", &[2, 0], (12, 8, 3)),
    code(R3, 4, "f1 f2^3", &[1, 3], (12, 4, 6)),
    code(R3, 4, "f1^3 f2", &[3, 1], (12, 4, 6)),
    code(R3, 4, "f1^2 f2^3", &[2, 3], (12, 2, 9)),
    code(R3, 4, "f1^3 f2^2", &[3, 2], (12, 2, 9)),
    code(R3, 5, "g1", &[1, 0], (15, 14, 2)),
    code(R3, 5, "g1^2", &[2, 0], (15, 13, 2)),
    code(R3, 5, "g1^3", &[3, 0], (15, 12, 2)),
    // Printed with g2 = x^4+2x^3+x^2+x+2, which does not divide x^5 - 2.
    // The true factor x^4+2x^3+x^2+2x+1 gives [15,11,2] and [15,9,3].
    code(R3, 5, "g2", &[0, 1], (15, 11, 3)),
    code(R3, 5, "g1^2 g2", &[2, 1], (15, 9, 4)),
    code(R3, 6, "h1", &[1], (18, 16, 2)),
    code(R4, 3, "f1^2 f2^4", &[2, 4], (15, 2, 12)),
    code(R4, 3, "f1^2", &[2, 0], (15, 10, 4)),
    // Printed as g1^19, which has dimension 1; g1^18 gives [25,2,20].
    CodeRow {
        ring: R4,
        len: 5,
        label: "g1^19",
        printed: &[19],
        exponents: &[18],
        params: (25, 2, 20),
    },
];
