use std::fmt::Write as _;

pub struct CheckInfo {
    pub name: &'static str,
    pub params: &'static str,
    pub statement: &'static str,
}

pub const CATALOG: &[CheckInfo] = &[
    CheckInfo {
        name: "colon_identities",
        params: "max: int = 6",
        statement: "for all 1 <= a < b <= max: (f^[b] : f^(b-a)) = f^[a] and (f^[b] : f^[a]) = (f^(b-a)) + f^[b], \
                    compared as reduced Groebner bases",
    },
    CheckInfo {
        name: "complex_wellformed",
        params: "levels: [int] = [1, 2, p+1, p^2+1]",
        statement: "each finite level of the DD complex has well-defined differentials with d.d = 0, satisfies the \
                    semi-cosimplicial identities d_k d_j = d_j d_(k-1) for j < k, and its summand embeddings into \
                    R/f^[a] commute with the differentials",
    },
    CheckInfo {
        name: "frobenius_stability",
        params: "levels: [int] = [1, 2, p+1, p^2+1]",
        statement: "the Fedder chain map L_a -> L_ap, r |-> f_S^(p-1) r^p, commutes with the differentials and with \
                    the transition a -> a+1, and matches the Fedder action on H^c_f(R) through the summand embeddings",
    },
    CheckInfo {
        name: "verify_vanishing",
        params: "levels: [int] = [2], degrees: [int] = all i < c, bound: int = a*p^2, \
                 schedule: \"geometric\" | \"unit\" = \"geometric\"",
        statement: "H^i of the DD complex vanishes for i < c: every cocycle generator at level a becomes a \
                    coboundary at some level b <= bound; reports the minimal such b, or bound_exceeded",
    },
    CheckInfo {
        name: "verify_augmentation",
        params: "max_level: int = 5",
        statement: "the augmentation is multiplication by f: (f^[a] : f) = sum_j (f^[a] : f_j), which is also the \
                    image of the last differential in R/f^[a], for 1 <= a <= max_level",
    },
    CheckInfo {
        name: "verify_structure_kernels",
        params: "exponents: [int] = [1, 2]",
        statement: "kernel of the structure morphism of the Fedder action: with q = p^e, \
                    (f^[q+p] : f^(p-1)) = f^[q+1]; also (f^[p] : f^(p-1)) = (f)",
    },
    CheckInfo {
        name: "verify_codim2_V",
        params: "exponents: [int] = [1, 2]",
        statement: "codimension two, (f, g) = (f_1, f_2), q = p^e: ((fg)^q, f^(q+p), g^(q+1)) : f^(q+1) = \
                    (f^(p-1), g^q) and symmetrically, and (f^(q+1)) meets (g^(q+1)) inside \
                    ((fg)^q, f^(q+p), g^(q+p)), so the two pieces of V have R-spans meeting in 0",
    },
    CheckInfo {
        name: "cech_fedder_algebra",
        params: "samples: int = 100, max_exponent: int = 3",
        statement: "the Fedder action fixes the image of R/f, F_fed^e({{1/f^2}}) = {{1/f^(p^e+1)}}, \
                    f F_fed(xi) = F_nat(f xi) and F_fed(s xi) = s^p F_fed(xi) on random classes",
    },
    CheckInfo {
        name: "filtration",
        params: "levels: [int] = [2]",
        statement: "for 1 <= n <= c the quotient complexes Q_n (summands S in [n]) are the DD complexes of \
                    f_1..f_n over R/(f_(n+1), .., f_c), and 0 -> K_n -> Q_n -> Q_(n-1) -> 0 is termwise split \
                    exact with K_n the shifted complex of f_1..f_(n-1) over R/(f_(n+1), .., f_c, f_n^a)",
    },
];

/// The catalog as printed by `list-checks`.
pub fn list_checks() -> String {
    let mut out = String::new();
    for info in CATALOG {
        let _ = writeln!(out, "{}\n  params: {}\n  verifies: {}\n", info.name, info.params, info.statement);
    }
    out
}
