//! Bracket identities behind each step of the two lemma chains.
//!
//! Squarefree chain: `F4 = H^2`, `G6 = alpha H^3`. Power chain: `F4 = h^4`,
//! `G6 = alpha h^6`. Each record names its free inputs, the forced forms it
//! substitutes from earlier steps, and the two sides. Both sides are
//! polynomial in the inputs, so every record must hold for every draw.

use super::expr::{br, q, slot, var, BracketExpr, Expr};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    /// Homogeneous form of the given degree.
    Form(u32),
    Scalar,
    NonzeroScalar,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Side {
    Bracket(BracketExpr),
    Poly(Expr),
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityRecord {
    pub id: String,
    pub summary: String,
    pub inputs: Vec<(String, InputKind)>,
    /// Evaluated in order; later definitions may refer to earlier ones.
    pub definitions: Vec<(String, Expr)>,
    pub lhs: Side,
    pub rhs: Side,
}

fn s(name: &str) -> Expr {
    slot(name)
}

fn x() -> Expr {
    var(0)
}

fn z() -> Expr {
    var(2)
}

fn n(k: i64) -> Expr {
    q(k, 1)
}

struct Builder {
    rec: IdentityRecord,
}

impl Builder {
    fn new(id: &str, summary: &str) -> Self {
        Builder {
            rec: IdentityRecord {
                id: id.into(),
                summary: summary.into(),
                inputs: Vec::new(),
                definitions: Vec::new(),
                lhs: Side::Poly(n(0)),
                rhs: Side::Poly(n(0)),
            },
        }
    }

    fn form(mut self, name: &str, d: u32) -> Self {
        self.rec.inputs.push((name.into(), InputKind::Form(d)));
        self
    }

    fn scalars(mut self, names: &[&str]) -> Self {
        for name in names {
            self.rec.inputs.push(((*name).into(), InputKind::Scalar));
        }
        self
    }

    fn nonzero(mut self, name: &str) -> Self {
        self.rec.inputs.push((name.into(), InputKind::NonzeroScalar));
        self
    }

    fn def(mut self, name: &str, e: Expr) -> Self {
        self.rec.definitions.push((name.into(), e));
        self
    }

    fn brackets(mut self, lhs: BracketExpr, rhs: BracketExpr) -> IdentityRecord {
        self.rec.lhs = Side::Bracket(lhs);
        self.rec.rhs = Side::Bracket(rhs);
        self.rec
    }

    fn polys(mut self, lhs: Expr, rhs: Expr) -> IdentityRecord {
        self.rec.lhs = Side::Poly(lhs);
        self.rec.rhs = Side::Poly(rhs);
        self.rec
    }

    // Shared definitions of the squarefree chain.

    fn sqf_top(self) -> Self {
        self.def("F4", s("H").pow(2)).def("G6", s("alpha") * s("H").pow(3))
    }

    fn sqf_g5(self) -> Self {
        self.def("G5", q(3, 2) * s("alpha") * s("H") * s("F3"))
    }

    fn sqf_f3(self) -> Self {
        self.def("F3", s("H") * s("Ft1"))
    }

    fn sqf_g4(self) -> Self {
        self.def(
            "G4",
            q(3, 8) * s("alpha") * s("H") * s("Ft1").pow(2)
                + q(3, 2) * s("alpha") * s("H") * s("F2")
                + s("b") * s("H").pow(2),
        )
    }

    fn sqf_g3(self) -> Self {
        self.def(
            "G3",
            q(-1, 16) * s("alpha") * s("Ft1").pow(3)
                + s("b") * s("H") * s("Ft1")
                + q(3, 2) * s("alpha") * s("H") * x()
                + q(3, 4) * s("alpha") * s("Ft1") * s("F2"),
        )
    }

    fn sqf_f2(self) -> Self {
        self.def("F2", q(1, 4) * (s("Ft1").pow(2) + s("d") * s("H")))
    }

    fn sqf_a(self) -> Self {
        self.def("A", q(3, 128) * s("alpha") * s("d").pow(2) + q(1, 4) * s("b") * s("d") + q(1, 2) * s("c"))
    }

    fn sqf_g2(self) -> Self {
        self.def("G2", s("A") * s("H") + q(1, 4) * s("b") * s("Ft1").pow(2) + q(3, 4) * s("alpha") * x() * s("Ft1"))
    }

    // Shared definitions of the power chain.

    fn pwr_top(self) -> Self {
        self.def("F4", s("h").pow(4)).def("G6", s("alpha") * s("h").pow(6))
    }

    fn pwr_g5(self) -> Self {
        self.def("G5", q(3, 2) * s("alpha") * s("h").pow(2) * s("F3") + s("beta") * s("h").pow(5))
    }

    fn pwr_g4(self) -> Self {
        self.def(
            "G4",
            q(3, 8) * s("alpha") * s("Ft2").pow(2)
                + q(5, 4) * s("beta") * s("h").pow(2) * s("Ft2")
                + q(3, 2) * s("alpha") * s("h").pow(2) * s("F2")
                + q(1, 4) * s("a") * s("h").pow(4),
        )
    }

    fn pwr_g3(self) -> Self {
        self.def(
            "G3",
            q(5, 32) * s("beta") * s("h") * s("Ft1").pow(2) + q(1, 4) * s("a") * s("h").pow(2) * s("Ft1")
                - q(1, 16) * s("alpha") * s("Ft1").pow(3)
                + q(5, 4) * s("beta") * s("h") * s("F2")
                + q(3, 2) * s("alpha") * s("h").pow(2) * x()
                + q(3, 4) * s("alpha") * s("F2") * s("Ft1")
                + q(1, 4) * s("c") * s("h").pow(3),
        )
    }

    /// Constants of the barred form, from `beta, a, b, c, d, alpha`.
    fn pwr_constants(self) -> Self {
        let (al, be, a, b, c, d) = (s("alpha"), s("beta"), s("a"), s("b"), s("c"), s("d"));
        self.def("A", q(5, 4) * be.clone() + q(3, 4) * al.clone() * b.clone())
            .def(
                "B",
                q(-5, 128) * be.clone() * b.clone().pow(3)
                    + q(3, 16) * c.clone() * b.clone()
                    + q(3, 128) * al.clone() * b.clone().pow(4)
                    + q(1, 4) * d,
            )
            .def("C", q(3, 8) * al.clone())
            .def(
                "D",
                q(1, 4) * a.clone() + q(5, 16) * be.clone() * b.clone() - q(3, 16) * al.clone() * b.clone().pow(2),
            )
            .def("E", q(3, 8) * al.clone() * b.clone().pow(2) + q(5, 4) * be.clone() * b.clone() + q(1, 4) * a.clone())
            .def(
                "K",
                q(5, 32) * be.clone() * b.clone().pow(2) + q(1, 4) * a * b.clone()
                    - q(1, 16) * al.clone() * b.clone().pow(3)
                    + q(1, 4) * c,
            )
            .def("L", q(5, 4) * be + q(3, 4) * al * b)
    }

    fn pwr_barred(self) -> Self {
        self.pwr_constants()
            .def("F3", s("b") * s("h").pow(3))
            .def("F2", s("h") * s("Fb1"))
            .def("G4", s("E") * s("h").pow(4) + q(3, 2) * s("alpha") * s("h").pow(3) * s("Fb1"))
            .def(
                "G3",
                s("K") * s("h").pow(3) + s("L") * s("h").pow(2) * s("Fb1") + q(3, 2) * s("alpha") * s("h").pow(2) * x(),
            )
            .def(
                "G2",
                s("A") * s("h") * x() + s("B") * s("h").pow(2) + s("C") * s("Fb1").pow(2) + s("D") * s("h") * s("Fb1"),
            )
    }

    /// The left-hand side of the degree-5 step of the barred branch, as a
    /// polynomial `W` with `[h, W]` equal to the degree-5 bracket part.
    fn pwr_level5_w(self, xs: Expr, zs: Expr) -> Self {
        let (h, fb) = (s("h"), s("Fb1"));
        self.def(
            "W",
            n(4) * h.clone().pow(3) * zs - n(4) * s("E") * h.clone().pow(3) * xs.clone()
                + n(3) * s("b") * s("A") * h.clone().pow(3) * xs.clone()
                + n(3) * s("b") * s("C") * h.clone().pow(2) * fb.clone().pow(2)
                + n(3) * s("b") * s("D") * h.clone().pow(3) * fb.clone()
                - n(3) * s("K") * h.clone().pow(3) * fb.clone()
                - q(1, 2) * s("L") * h.clone().pow(2) * fb.clone().pow(2)
                - n(3) * s("alpha") * h.pow(2) * xs * fb,
        )
    }
}

fn sqf9() -> IdentityRecord {
    Builder::new("SQF-9", "degree-9 part with F4 = H^2, G6 = alpha H^3 collapses to one bracket with H")
        .form("H", 2)
        .nonzero("alpha")
        .form("F3", 3)
        .form("G5", 5)
        .sqf_top()
        .brackets(
            br(s("F4"), s("G5")) + br(s("F3"), s("G6")),
            br(s("H"), n(2) * s("H") * s("G5") - n(3) * s("alpha") * s("H").pow(2) * s("F3")),
        )
}

fn sqf8() -> IdentityRecord {
    Builder::new("SQF-8", "degree-8 part once G5 = 3/2 alpha H F3")
        .form("H", 2)
        .nonzero("alpha")
        .form("F2", 2)
        .form("F3", 3)
        .form("G4", 4)
        .sqf_top()
        .sqf_g5()
        .brackets(
            br(s("F4"), s("G4")) + br(s("F3"), s("G5")) + br(s("F2"), s("G6")),
            br(
                s("H"),
                n(2) * s("H") * s("G4")
                    - q(3, 4) * s("alpha") * s("F3").pow(2)
                    - n(3) * s("alpha") * s("H").pow(2) * s("F2"),
            ),
        )
}

fn sqf7() -> IdentityRecord {
    Builder::new("SQF-7", "degree-7 part once F3 = H Ft1 and G4 is forced")
        .form("H", 2)
        .nonzero("alpha")
        .scalars(&["b"])
        .form("Ft1", 1)
        .form("F2", 2)
        .form("G3", 3)
        .sqf_top()
        .sqf_f3()
        .sqf_g5()
        .sqf_g4()
        .brackets(
            br(s("F4"), s("G3")) + br(s("F3"), s("G4")) + br(s("F2"), s("G5")) + br(x(), s("G6")),
            br(
                s("H"),
                n(2) * s("H") * s("G3") + q(1, 8) * s("alpha") * s("H") * s("Ft1").pow(3)
                    - n(2) * s("b") * s("H").pow(2) * s("Ft1")
                    - n(3) * s("alpha") * s("H").pow(2) * x()
                    - q(3, 2) * s("alpha") * s("H") * s("Ft1") * s("F2"),
            ),
        )
}

fn sqf6_with(id: &str, summary: &str, b_hf2: i64) -> IdentityRecord {
    Builder::new(id, summary)
        .form("H", 2)
        .nonzero("alpha")
        .scalars(&["b"])
        .form("Ft1", 1)
        .form("F2", 2)
        .form("G2", 2)
        .sqf_top()
        .sqf_f3()
        .sqf_g5()
        .sqf_g4()
        .sqf_g3()
        .brackets(
            br(s("F4"), s("G2")) + br(s("F3"), s("G3")) + br(s("F2"), s("G4")) + br(x(), s("G5")),
            br(
                s("H"),
                n(2) * s("H") * s("G2")
                    - q(3, 64) * s("alpha") * s("Ft1").pow(4)
                    - q(3, 4) * s("alpha") * s("F2").pow(2)
                    + n(b_hf2) * s("b") * s("H") * s("F2")
                    + q(3, 8) * s("alpha") * s("Ft1").pow(2) * s("F2")
                    - q(3, 2) * s("alpha") * s("H") * x() * s("Ft1"),
            ),
        )
}

fn sqf6() -> IdentityRecord {
    sqf6_with("SQF-6", "degree-6 part once G3 is forced; the b-term enters as -2bHF2", -2)
}

fn sqf5() -> IdentityRecord {
    Builder::new("SQF-5", "degree-5 part once F2 = (Ft1^2 + dH)/4 and G2 is forced")
        .form("H", 2)
        .nonzero("alpha")
        .scalars(&["b", "c", "d"])
        .form("Ft1", 1)
        .sqf_top()
        .sqf_a()
        .sqf_f3()
        .sqf_f2()
        .sqf_g2()
        .sqf_g3()
        .sqf_g4()
        .brackets(
            br(s("F4"), z()) + br(s("F3"), s("G2")) + br(s("F2"), s("G3")) + br(x(), s("G4")),
            br(
                s("H"),
                n(2) * s("H") * z() - s("A") * s("H") * s("Ft1")
                    + (q(1, 4) * s("b") * s("d") + q(3, 64) * s("alpha") * s("d").pow(2)) * s("H") * s("Ft1")
                    - (q(3, 8) * s("alpha") * s("d") + n(2) * s("b")) * s("H") * x(),
            ),
        )
}

fn sqf4_defs(b: Builder) -> Builder {
    b.form("H", 2)
        .nonzero("alpha")
        .scalars(&["b", "c", "d"])
        .form("Ft1", 1)
        .sqf_a()
        .def("M", q(-3, 256) * s("alpha") * s("d").pow(2) + q(1, 4) * s("c"))
        .def("Z", s("M") * s("Ft1") + (q(3, 16) * s("alpha") * s("d") + s("b")) * x())
        .sqf_f3()
        .sqf_f2()
        .sqf_g2()
        .sqf_g3()
}

fn sqf4() -> IdentityRecord {
    sqf4_defs(Builder::new("SQF-4", "degree-4 part once z = M Ft1 + (3/16 alpha d + b) x"))
        .def(
            "Q",
            q(1, 2) * s("M") * s("Ft1").pow(2) - q(1, 4) * s("A") * s("Ft1").pow(2)
                + q(1, 16) * s("b") * s("d") * s("Ft1").pow(2)
                + q(3, 16) * s("alpha") * s("d") * x() * s("Ft1")
                - q(3, 4) * s("alpha") * x().pow(2),
        )
        .brackets(br(s("F3"), s("Z")) + br(s("F2"), s("G2")) + br(x(), s("G3")), br(s("H"), s("Q")))
}

fn sqf4_square() -> IdentityRecord {
    sqf4_defs(Builder::new("SQF-4-square", "the degree-4 quadratic is -3/4 alpha (d Ft1/8 - x)^2")).polys(
        q(1, 2) * s("M") * s("Ft1").pow(2) - q(1, 4) * s("A") * s("Ft1").pow(2)
            + q(1, 16) * s("b") * s("d") * s("Ft1").pow(2)
            + q(3, 16) * s("alpha") * s("d") * x() * s("Ft1")
            - q(3, 4) * s("alpha") * x().pow(2),
        q(-3, 4) * s("alpha") * (q(1, 8) * s("d") * s("Ft1") - x()).pow(2),
    )
}

fn pwr9() -> IdentityRecord {
    Builder::new("PWR-9", "degree-9 part with F4 = h^4, G6 = alpha h^6 collapses to one bracket with h")
        .form("h", 1)
        .nonzero("alpha")
        .form("F3", 3)
        .form("G5", 5)
        .pwr_top()
        .brackets(
            br(s("F4"), s("G5")) + br(s("F3"), s("G6")),
            br(s("h"), n(4) * s("h").pow(3) * s("G5") - n(6) * s("alpha") * s("h").pow(5) * s("F3")),
        )
}

fn pwr8() -> IdentityRecord {
    Builder::new("PWR-8", "degree-8 part once G5 = 3/2 alpha h^2 F3 + beta h^5")
        .form("h", 1)
        .nonzero("alpha")
        .scalars(&["beta"])
        .form("F2", 2)
        .form("F3", 3)
        .form("G4", 4)
        .pwr_top()
        .pwr_g5()
        .brackets(
            br(s("F4"), s("G4")) + br(s("F3"), s("G5")) + br(s("F2"), s("G6")),
            br(
                s("h"),
                n(4) * s("h").pow(3) * s("G4")
                    - q(3, 2) * s("alpha") * s("h") * s("F3").pow(2)
                    - n(5) * s("beta") * s("h").pow(4) * s("F3")
                    - n(6) * s("alpha") * s("h").pow(5) * s("F2"),
            ),
        )
}

fn pwr7() -> IdentityRecord {
    Builder::new("PWR-7", "degree-7 part once F3 = h Ft2 and G4 is forced")
        .form("h", 1)
        .nonzero("alpha")
        .scalars(&["beta", "a"])
        .form("Ft2", 2)
        .form("F2", 2)
        .form("G3", 3)
        .pwr_top()
        .def("F3", s("h") * s("Ft2"))
        .pwr_g5()
        .pwr_g4()
        .brackets(
            br(s("F4"), s("G3")) + br(s("F3"), s("G4")) + br(s("F2"), s("G5")) + br(x(), s("G6")),
            br(
                s("h"),
                n(4) * s("h").pow(3) * s("G3")
                    - n(6) * s("alpha") * s("h").pow(5) * x()
                    - s("a") * s("h").pow(4) * s("Ft2")
                    + q(1, 4) * s("alpha") * s("Ft2").pow(3)
                    - n(5) * s("beta") * s("h").pow(4) * s("F2")
                    - q(5, 8) * s("beta") * s("h").pow(2) * s("Ft2").pow(2)
                    - n(3) * s("alpha") * s("h").pow(2) * s("F2") * s("Ft2"),
            ),
        )
}

fn pwr6() -> IdentityRecord {
    Builder::new("PWR-6", "degree-6 part once Ft2 = h Ft1 and G3 is forced")
        .form("h", 1)
        .nonzero("alpha")
        .scalars(&["beta", "a", "c"])
        .form("Ft1", 1)
        .form("F2", 2)
        .form("G2", 2)
        .pwr_top()
        .def("Ft2", s("h") * s("Ft1"))
        .def("F3", s("h") * s("Ft2"))
        .pwr_g5()
        .pwr_g4()
        .pwr_g3()
        .brackets(
            br(s("F4"), s("G2")) + br(s("F3"), s("G3")) + br(s("F2"), s("G4")) + br(x(), s("G5")),
            br(
                s("h"),
                n(4) * s("h").pow(3) * s("G2")
                    - n(5) * s("beta") * s("h").pow(4) * x()
                    - q(3, 4) * s("c") * s("h").pow(4) * s("Ft1")
                    - q(3, 32) * s("alpha") * s("h") * s("Ft1").pow(4)
                    - q(3, 2) * s("alpha") * s("h") * s("F2").pow(2)
                    - s("a") * s("h").pow(3) * s("F2")
                    + q(5, 32) * s("beta") * s("h").pow(2) * s("Ft1").pow(3)
                    - q(5, 4) * s("beta") * s("h").pow(2) * s("Ft1") * s("F2")
                    - n(3) * s("alpha") * s("h").pow(3) * x() * s("Ft1")
                    + q(3, 4) * s("alpha") * s("h") * s("Ft1").pow(2) * s("F2"),
            ),
        )
}

fn pwr5() -> IdentityRecord {
    Builder::new("PWR-5", "degree-5 part in the barred form F2 = h Fb1, Ft1 = b h")
        .form("h", 1)
        .nonzero("alpha")
        .scalars(&["beta", "a", "b", "c", "d"])
        .form("Fb1", 1)
        .pwr_top()
        .pwr_barred()
        .pwr_level5_w(x(), z())
        .brackets(br(s("F4"), z()) + br(s("F3"), s("G2")) + br(s("F2"), s("G3")) + br(x(), s("G4")), br(s("h"), s("W")))
}

fn pwr4() -> IdentityRecord {
    Builder::new("PWR-4", "degree-4 part when Fb1 = f h")
        .form("h", 1)
        .nonzero("alpha")
        .scalars(&["beta", "a", "b", "c", "d", "f"])
        .pwr_constants()
        .def("P", s("K") + s("L") * s("f"))
        .def("F3", s("b") * s("h").pow(3))
        .def("F2", s("f") * s("h").pow(2))
        .def("G2", s("A") * s("h") * x() + (s("B") + s("C") * s("f").pow(2) + s("D") * s("f")) * s("h").pow(2))
        .def("G3", s("P") * s("h").pow(3) + q(3, 2) * s("alpha") * s("h").pow(2) * x())
        .brackets(
            br(s("F3"), z()) + br(s("F2"), s("G2")) + br(x(), s("G3")),
            br(
                s("h"),
                n(3) * s("b") * s("h").pow(2) * z() + n(2) * s("f") * s("A") * s("h").pow(2) * x()
                    - n(3) * s("P") * s("h").pow(2) * x()
                    - q(3, 2) * s("alpha") * s("h") * x().pow(2),
            ),
        )
}

fn pwr4_quadratic() -> IdentityRecord {
    Builder::new("PWR-4-Q", "degree-4 part when x = R Fb1 + S h and z = M Fb1 + N h")
        .form("h", 1)
        .form("Fb1", 1)
        .nonzero("alpha")
        .scalars(&["beta", "a", "b", "c", "d", "gamma", "M", "N"])
        .pwr_constants()
        .def("R", q(1, 4) * s("b") - q(5, 24) * s("beta") * s("alpha").recip())
        .def("S", q(-1, 3) * s("gamma") * s("alpha").recip())
        .def("X", s("R") * s("Fb1") + s("S") * s("h"))
        .def("Z", s("M") * s("Fb1") + s("N") * s("h"))
        .def("Kt", s("K") + q(3, 2) * s("alpha") * s("S"))
        .def("Lt", s("L") + q(3, 2) * s("alpha") * s("R"))
        .def("Bt", s("B") + s("A") * s("S"))
        .def("F3", s("b") * s("h").pow(3))
        .def("F2", s("h") * s("Fb1"))
        .def(
            "G2",
            s("A") * s("h") * s("X") + s("B") * s("h").pow(2) + s("C") * s("Fb1").pow(2) + s("D") * s("h") * s("Fb1"),
        )
        .def(
            "G3",
            s("K") * s("h").pow(3) + s("L") * s("h").pow(2) * s("Fb1") + q(3, 2) * s("alpha") * s("h").pow(2) * s("X"),
        )
        .def(
            "Q",
            (n(3) * s("b") * s("M") - n(2) * s("Bt") - n(3) * s("Kt") * s("R") + s("S") * s("Lt")) * s("h").pow(2)
                - n(2) * s("R") * s("Lt") * s("h") * s("Fb1")
                + n(2) * s("C") * s("Fb1").pow(2),
        )
        .brackets(br(s("F3"), s("Z")) + br(s("F2"), s("G2")) + br(s("X"), s("G3")), s("Q") * br(s("h"), s("Fb1")))
}

/// `z` in the span case: with `x` eliminated through
/// `(3bC - L/2) Fb1 - 3 alpha x = gamma h`, the degree-5 polynomial `W`
/// must equal `e h^4`. `ba_coeff` is the coefficient of `bA` in `z`.
fn pwr5_span_z(id: &str, summary: &str, ba_coeff: Expr) -> IdentityRecord {
    Builder::new(id, summary)
        .form("h", 1)
        .form("Fb1", 1)
        .nonzero("alpha")
        .scalars(&["beta", "a", "b", "c", "d", "gamma", "e"])
        .pwr_constants()
        .def("rho", n(3) * s("b") * s("C") - q(1, 2) * s("L"))
        .def("X", (s("rho") * s("Fb1") - s("gamma") * s("h")) * (n(3) * s("alpha")).recip())
        .def(
            "Z",
            (s("E") - ba_coeff * s("b") * s("A")) * s("X")
                + (q(3, 4) * s("K") - q(3, 4) * s("b") * s("D") - q(1, 4) * s("gamma")) * s("Fb1")
                + q(1, 4) * s("e") * s("h"),
        )
        .pwr_level5_w(s("X"), s("Z"))
        .polys(s("W"), s("e") * s("h").pow(4))
}

/// The twelve identities of the two chains.
pub fn catalog() -> Vec<IdentityRecord> {
    vec![sqf9(), sqf8(), sqf7(), sqf6(), sqf5(), sqf4(), pwr9(), pwr8(), pwr7(), pwr6(), pwr5(), pwr4()]
}

/// Further identities the contradiction arguments rely on.
pub fn supplementary() -> Vec<IdentityRecord> {
    vec![
        sqf4_square(),
        pwr4_quadratic(),
        pwr5_span_z("PWR-5-span", "z in the span case with coefficient E - 3/4 bA", q(3, 4)),
    ]
}

/// Alternative readings of individual coefficients. Not all of them hold;
/// verifying them records which reading is consistent.
pub fn alternative_readings() -> Vec<IdentityRecord> {
    let mut sqf5_alt = sqf5();
    sqf5_alt.id = "SQF-5/alt-sign".into();
    sqf5_alt.summary = "G2 with -b Ft1^2/4 and A with -bd/4, paired with the matching degree-5 collapse".into();
    sqf5_alt.definitions = sqf5_alt
        .definitions
        .into_iter()
        .map(|(name, e)| match name.as_str() {
            "A" => (name, q(3, 128) * s("alpha") * s("d").pow(2) - q(1, 4) * s("b") * s("d") + q(1, 2) * s("c")),
            "G2" => {
                (name, s("A") * s("H") - q(1, 4) * s("b") * s("Ft1").pow(2) + q(3, 4) * s("alpha") * x() * s("Ft1"))
            }
            _ => (name, e),
        })
        .collect();
    sqf5_alt.rhs = Side::Bracket(br(
        s("H"),
        n(2) * s("H") * z() - s("A") * s("H") * s("Ft1") - q(1, 3) * s("b") * s("Ft1").pow(3)
            + (q(1, 4) * s("b") * s("d") + q(3, 64) * s("alpha") * s("d").pow(2)) * s("H") * s("Ft1")
            - (q(3, 8) * s("alpha") * s("d") + n(2) * s("b")) * s("H") * x(),
    ));

    vec![
        sqf6_with("SQF-6/+2bHF2", "degree-6 collapse with the b-term entered as +2bHF2", 2),
        sqf5_alt,
        pwr5_span_z("PWR-5-span/E-3/4bA", "z in the span case with coefficient E - 3/4 bA", q(3, 4)),
        pwr5_span_z("PWR-5-span/E-3bA", "z in the span case with coefficient E - 3 bA", q(3, 1)),
    ]
}

pub fn find(id: &str) -> Option<IdentityRecord> {
    catalog().into_iter().chain(supplementary()).chain(alternative_readings()).find(|r| r.id == id)
}

pub fn all_ids() -> Vec<String> {
    catalog().into_iter().chain(supplementary()).chain(alternative_readings()).map(|r| r.id).collect()
}
