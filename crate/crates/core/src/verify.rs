//! Named check suites producing a uniform report.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use serde::Serialize;

use crate::catalog as cat;
use crate::diagram::Morphism;
use crate::gram::{gram, Catalog, GramMatrix};
use crate::liealg::g2::{g2_checks, g2_structure};
use crate::liealg::network::{closed_value_numeric, phi_tensor, TensorModel};
use crate::liealg::octonion::octonion_checks;
use crate::liealg::roots::{RootSystem, RootType};
use crate::liealg::Check;
use crate::rewrite::{Evaluator, RuleSet};
use crate::scalar::{int, parse_rational, rat, Poly, RatFunc, Rational};
use crate::tl;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// A value printed in the literature being reproduced.
    Published,
    /// Holds by construction or by a one-line argument.
    Identity,
    /// Obtained by an independent computation.
    Computed,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Published => "published",
            Source::Identity => "identity",
            Source::Computed => "computed",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Line {
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub source: Source,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub lines: Vec<Line>,
    pub passed: bool,
    pub elapsed_ms: u128,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            lines: Vec::new(),
            passed: true,
            elapsed_ms: 0,
        }
    }

    fn check(
        &mut self,
        id: impl Into<String>,
        expected: impl fmt::Display,
        computed: impl fmt::Display,
        source: Source,
        passed: bool,
    ) {
        self.passed &= passed;
        self.lines.push(Line {
            id: id.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            source,
            passed,
        });
    }

    fn equal<T: PartialEq + fmt::Display>(&mut self, id: impl Into<String>, expected: T, computed: T, source: Source) {
        let ok = expected == computed;
        self.check(id, expected, computed, source, ok);
    }

    fn fail(&mut self, id: impl Into<String>, expected: impl fmt::Display, err: impl fmt::Display, source: Source) {
        self.check(id, expected, format!("error: {err}"), source, false);
    }

    fn named(&mut self, prefix: &str, checks: Vec<Check>, source: Source) {
        for c in checks {
            self.check(format!("{prefix}.{}", c.name), "holds", &c.detail, source, c.passed);
        }
    }

    fn absorb(&mut self, other: Report) {
        self.passed &= other.passed;
        self.lines.extend(other.lines);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Line> {
        self.lines.iter().filter(|l| !l.passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("== {} ==\n", self.command);
        for l in &self.lines {
            let status = if l.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!(
                "{status}  {}  expected: {} [{}]  computed: {}\n",
                l.id, l.expected, l.source, l.computed
            ));
        }
        let total = self.lines.len();
        let bad = self.failures().count();
        s.push_str(&format!(
            "{} ({} of {total} checks passed, {} ms)\n",
            if self.passed { "PASS" } else { "FAIL" },
            total - bad,
            self.elapsed_ms
        ));
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Windy,
    RotSwitch,
    Gram5,
    Gram16,
    Rank3,
    Relations,
    Dims,
    G2Oracle,
    Octonion,
    TlFunctor,
    All,
}

impl Target {
    pub const SUITES: [Target; 10] = [
        Target::Windy,
        Target::RotSwitch,
        Target::Gram5,
        Target::Gram16,
        Target::Rank3,
        Target::Relations,
        Target::Dims,
        Target::G2Oracle,
        Target::Octonion,
        Target::TlFunctor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Windy => "windy",
            Target::RotSwitch => "rotswitch",
            Target::Gram5 => "gram5",
            Target::Gram16 => "gram16",
            Target::Rank3 => "rank3",
            Target::Relations => "relations",
            Target::Dims => "dims",
            Target::G2Oracle => "g2-oracle",
            Target::Octonion => "octonion",
            Target::TlFunctor => "tl-functor",
            Target::All => "all",
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown target `{0}`")]
pub struct UnknownTarget(pub String);

impl FromStr for Target {
    type Err = UnknownTarget;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Target::SUITES
            .iter()
            .chain(std::iter::once(&Target::All))
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| UnknownTarget(s.to_string()))
    }
}

pub fn run(target: Target) -> Report {
    let start = Instant::now();
    let mut report = match target {
        Target::All => {
            let mut r = Report::new("all");
            for t in Target::SUITES {
                r.absorb(run(t));
            }
            r
        }
        Target::Windy => windy(),
        Target::RotSwitch => rotswitch(),
        Target::Gram5 => gram5(),
        Target::Gram16 => gram16(),
        Target::Rank3 => rank3(),
        Target::Relations => relations(),
        Target::Dims => dims(),
        Target::G2Oracle => g2_oracle(),
        Target::Octonion => octonion(),
        Target::TlFunctor => tl_functor(),
    };
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

fn d() -> RatFunc {
    RatFunc::var()
}

fn c(x: Rational) -> RatFunc {
    RatFunc::from_rational(x)
}

fn parse_entry(s: &str) -> RatFunc {
    if s == "d" {
        d()
    } else {
        c(parse_rational(s).expect("table entry"))
    }
}

fn table(rows: &[&str], factor: &RatFunc) -> GramMatrix {
    let entries = rows
        .iter()
        .map(|r| r.split_whitespace().map(|e| &parse_entry(e) * factor).collect())
        .collect();
    GramMatrix { entries }
}

/// Printed Gram matrix of jail, hourglass, cross, H, I.
pub fn published_gram5() -> GramMatrix {
    let d = d();
    let sq = &d * &d;
    let z = RatFunc::zero();
    let h = &c(rat(1, 2)) * &d;
    let n = -&d;
    GramMatrix {
        entries: vec![
            vec![sq.clone(), d.clone(), d.clone(), z.clone(), d.clone()],
            vec![d.clone(), sq.clone(), d.clone(), d.clone(), z.clone()],
            vec![d.clone(), d.clone(), sq, n.clone(), n.clone()],
            vec![z.clone(), d.clone(), n.clone(), d.clone(), h.clone()],
            vec![d.clone(), z, n, h, d],
        ],
    }
}

/// Printed Gram matrix of the sixteen (2,3) diagrams, including its overall factor `d`.
pub fn published_gram16() -> GramMatrix {
    const ROWS: [&str; 16] = [
        "1 1/4 1/4 1/2 1/2 1/2 0 0 1 1 1/2 -1 -1 -1/2 -1/2 0",
        "1/4 1 1/2 1/4 1/2 0 1/2 1 0 1 -1 1/2 -1/2 -1 -1/2 -1/4",
        "1/4 1/2 1 1/2 1/4 0 1 1/2 1 0 -1 -1/2 1/2 -1/2 -1 -1/4",
        "1/2 1/4 1/2 1 1/4 1 0 1 1/2 0 -1/2 -1 -1/2 1/2 -1 1/4",
        "1/2 1/2 1/4 1/4 1 1 1 0 0 1/2 -1/2 -1/2 -1 -1 1/2 1/4",
        "1/2 0 0 1 1 d 1 1 0 0 0 -1 -1 1 1 1/2",
        "0 1/2 1 0 1 1 d 0 1 0 -1 0 1 -1 1 -1",
        "0 1 1/2 1 0 1 0 d 0 1 -1 1 0 1 -1 -1/2",
        "1 0 1 1/2 0 0 1 0 d 1 1 -1 1 0 -1 -1",
        "1 1 0 0 1/2 0 0 1 1 d 1 1 -1 -1 0 -1",
        "1/2 -1 -1 -1/2 -1/2 0 -1 -1 1 1 d 0 0 1 1 -1/2",
        "-1 1/2 -1/2 -1 -1/2 -1 0 1 -1 1 0 d 1 0 1 -1",
        "-1 -1/2 1/2 -1/2 -1 -1 1 0 1 -1 0 1 d 1 0 -1",
        "-1/2 -1 -1/2 1/2 -1 1 -1 1 0 -1 1 0 1 d 0 0",
        "-1/2 -1/2 -1 -1 1/2 1 1 -1 -1 0 1 1 0 0 d 0",
        "0 -1/4 -1/4 1/4 1/4 1/2 -1 -1/2 -1 -1 -1/2 -1 -1 0 0 1",
    ];
    table(&ROWS, &d())
}

fn poly(coeffs: &[Rational]) -> Poly {
    Poly::from_coeffs(coeffs.to_vec())
}

fn linear(root: i64) -> Poly {
    Poly::from_ints(&[-root, 1])
}

/// `3/4 d^5 (d - 3)^2 (d + 2)`.
pub fn published_det5() -> RatFunc {
    let p = &(&Poly::monomial(rat(3, 4), 5) * &linear(3).pow(2)) * &linear(-2);
    RatFunc::from_poly(p)
}

/// `125/4096 d^16 (d - 3)^8 (4 d^2 - 30 d + 45)`.
pub fn published_det16() -> RatFunc {
    let q = poly(&[int(45), int(-30), int(4)]);
    let p = &(&Poly::monomial(rat(125, 4096), 16) * &linear(3).pow(8)) * &q;
    RatFunc::from_poly(p)
}

fn gram_cache(cat: Catalog) -> &'static Result<GramMatrix, String> {
    static FIVE: OnceLock<Result<GramMatrix, String>> = OnceLock::new();
    static SIXTEEN: OnceLock<Result<GramMatrix, String>> = OnceLock::new();
    let cell = match cat {
        Catalog::BigFive => &FIVE,
        Catalog::Particles => &SIXTEEN,
    };
    cell.get_or_init(|| gram(cat, &RuleSet::quotient()).map_err(|e| e.to_string()))
}

fn compare_entries(r: &mut Report, name: &str, computed: &GramMatrix, printed: &GramMatrix) {
    let n = printed.size();
    let mut bad = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if computed.entries[i][j] != printed.entries[i][j] {
                bad.push(format!(
                    "({},{}) printed {} computed {}",
                    i + 1,
                    j + 1,
                    printed.entries[i][j],
                    computed.entries[i][j]
                ));
            }
        }
    }
    let detail = if bad.is_empty() {
        format!("{} of {} entries agree", n * n, n * n)
    } else {
        bad.join("; ")
    };
    r.check(
        format!("{name}.entries"),
        format!("{} of {} entries agree", n * n, n * n),
        detail,
        Source::Published,
        bad.is_empty(),
    );
}

fn gram5() -> Report {
    let mut r = Report::new("gram5");
    match gram_cache(Catalog::BigFive) {
        Ok(g) => {
            compare_entries(&mut r, "gram5", g, &published_gram5());
            r.equal("gram5.symmetric", true, g.is_symmetric(), Source::Identity);
            r.equal("gram5.det", published_det5(), g.det(), Source::Published);
        }
        Err(e) => r.fail("gram5", "matrix", e, Source::Published),
    }
    r
}

fn gram16() -> Report {
    let mut r = Report::new("gram16");
    match gram_cache(Catalog::Particles) {
        Ok(g) => {
            compare_entries(&mut r, "gram16", g, &published_gram16());
            r.equal("gram16.symmetric", true, g.is_symmetric(), Source::Identity);
            r.equal("gram16.det", published_det16(), g.det(), Source::Published);
            match g.rank_at(&int(14)) {
                Ok(k) => r.equal("gram16.rank_at_14", 16, k, Source::Published),
                Err(e) => r.fail("gram16.rank_at_14", 16, e, Source::Published),
            }
        }
        Err(e) => r.fail("gram16", "matrix", e, Source::Published),
    }
    r
}

fn rank3_line(r: &mut Report) {
    match gram_cache(Catalog::Particles) {
        Ok(g) => match g.rank_at(&int(3)) {
            Ok(k) => r.equal("gram16.rank_at_3", 8, k, Source::Published),
            Err(e) => r.fail("gram16.rank_at_3", 8, e, Source::Published),
        },
        Err(e) => r.fail("gram16.rank_at_3", 8, e, Source::Published),
    }
}

fn rank3() -> Report {
    let mut r = Report::new("rank3");
    rank3_line(&mut r);
    r
}

fn zero_vector(v: &[RatFunc]) -> bool {
    v.iter().all(RatFunc::is_zero)
}

fn relations() -> Report {
    let mut r = Report::new("relations");
    let mut ev = Evaluator::new(RuleSet::quotient());
    let triangle_split = cat::triangle().compose(&cat::split()).expect("arities agree");
    let triangle_rhs_split = cat::triangle_rhs().compose(&cat::split()).expect("arities agree");
    let cases: [(&str, Morphism, Morphism, Vec<Morphism>); 4] = [
        ("magic_vs_bigfive", cat::dotcross(), cat::magic_rhs(), cat::bigfive()),
        ("square_vs_bigfive", cat::square(), cat::square_rhs(), cat::bigfive()),
        (
            "pentagon_vs_particles",
            cat::pentagon(),
            cat::pentagon_rhs(),
            cat::particles(),
        ),
        (
            "triangle_vs_bigfive",
            triangle_split,
            triangle_rhs_split,
            cat::bigfive(),
        ),
    ];
    for (name, lhs, rhs, probes) in cases {
        let expected = format!("{} zeros", probes.len());
        match ev.relation_residual(&lhs, &rhs, &probes) {
            Ok(v) => {
                let shown = v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
                r.check(
                    format!("relations.{name}"),
                    expected,
                    format!("[{shown}]"),
                    Source::Published,
                    zero_vector(&v),
                );
            }
            Err(e) => r.fail(format!("relations.{name}"), expected, e, Source::Published),
        }
    }
    r
}

fn structural(
    r: &mut Report,
    id: &str,
    lhs: Result<Morphism, crate::diagram::DiagramError>,
    rhs: Morphism,
    source: Source,
) {
    match lhs {
        Ok(l) => {
            let ok = l.structural_equal(&rhs);
            r.check(
                format!("windy.{id}"),
                "structurally equal",
                if ok { "structurally equal" } else { "differ" },
                source,
                ok,
            );
        }
        Err(e) => r.fail(format!("windy.{id}"), "structurally equal", e, source),
    }
}

fn windy() -> Report {
    use cat::{cap, cross, cup, dotcross, identity, identity_n, jail, merge, split};
    let mut r = Report::new("windy");
    let id = identity;
    let t = |a: Morphism, b: Morphism| a.tensor(&b);
    let chain = |ms: &[Morphism]| ms[1..].iter().try_fold(ms[0].clone(), |acc, m| acc.compose(m));
    let neg = |m: Morphism| m.scale(&RatFunc::from_int(-1));

    structural(
        &mut r,
        "zigzag_left",
        chain(&[t(cup(), id()), t(id(), cap())]),
        id(),
        Source::Published,
    );
    structural(
        &mut r,
        "zigzag_right",
        chain(&[t(id(), cup()), t(cap(), id())]),
        id(),
        Source::Published,
    );
    structural(
        &mut r,
        "split_left_cup",
        chain(&[t(cup(), id()), t(id(), merge())]),
        split(),
        Source::Published,
    );
    structural(
        &mut r,
        "split_right_cup",
        chain(&[t(id(), cup()), t(merge(), id())]),
        split(),
        Source::Published,
    );
    structural(
        &mut r,
        "merge_left_cap",
        chain(&[t(id(), split()), t(cap(), id())]),
        merge(),
        Source::Published,
    );
    structural(
        &mut r,
        "merge_right_cap",
        chain(&[t(split(), id()), t(id(), cap())]),
        merge(),
        Source::Published,
    );
    structural(
        &mut r,
        "closed_merge_sides",
        chain(&[t(id(), merge()), cap()]),
        chain(&[t(merge(), id()), cap()]).expect("arities agree"),
        Source::Published,
    );
    structural(
        &mut r,
        "opened_split_sides",
        chain(&[cup(), t(id(), split())]),
        chain(&[cup(), t(split(), id())]).expect("arities agree"),
        Source::Published,
    );
    structural(
        &mut r,
        "strand_past_cup",
        chain(&[t(id(), cup()), t(cross(), id())]),
        chain(&[t(cup(), id()), t(id(), cross())]).expect("arities agree"),
        Source::Published,
    );
    structural(
        &mut r,
        "crossing_bent_left",
        chain(&[
            t(identity_n(2), cup()),
            t(id(), t(cross(), id())),
            t(cap(), identity_n(2)),
        ]),
        cross(),
        Source::Published,
    );
    structural(
        &mut r,
        "crossing_bent_right",
        chain(&[
            t(cup(), identity_n(2)),
            t(id(), t(cross(), id())),
            t(identity_n(2), cap()),
        ]),
        cross(),
        Source::Published,
    );
    structural(
        &mut r,
        "dotcross_bent_left",
        chain(&[
            t(identity_n(2), cup()),
            t(id(), t(dotcross(), id())),
            t(cap(), identity_n(2)),
        ]),
        neg(dotcross()),
        Source::Published,
    );
    structural(
        &mut r,
        "dotcross_bent_right",
        chain(&[
            t(cup(), identity_n(2)),
            t(id(), t(dotcross(), id())),
            t(identity_n(2), cap()),
        ]),
        neg(dotcross()),
        Source::Published,
    );
    structural(
        &mut r,
        "crossing_involution",
        chain(&[cross(), cross()]),
        jail(),
        Source::Published,
    );
    structural(
        &mut r,
        "braid",
        chain(&[t(cross(), id()), t(id(), cross()), t(cross(), id())]),
        chain(&[t(id(), cross()), t(cross(), id()), t(id(), cross())]).expect("arities agree"),
        Source::Published,
    );
    structural(
        &mut r,
        "merge_naturality",
        chain(&[t(merge(), id()), cross()]),
        chain(&[t(id(), cross()), t(cross(), id()), t(id(), merge())]).expect("arities agree"),
        Source::Published,
    );
    structural(
        &mut r,
        "split_naturality",
        chain(&[cross(), t(split(), id())]),
        chain(&[t(id(), split()), t(cross(), id()), t(id(), cross())]).expect("arities agree"),
        Source::Published,
    );
    structural(
        &mut r,
        "cap_symmetry",
        chain(&[cross(), cap()]),
        cap(),
        Source::Published,
    );
    structural(
        &mut r,
        "merge_antisymmetry",
        chain(&[cross(), merge()]),
        neg(merge()),
        Source::Published,
    );
    let lolly = chain(&[split(), cap()]).expect("arities agree");
    r.equal("windy.lollipop_vanishes", true, lolly.is_zero(), Source::Published);
    r
}

fn rotswitch() -> Report {
    use cat::{bigfive, cross, dotcross, h_diagram, hourglass, i_diagram, jail};
    let mut r = Report::new("rotswitch");
    let neg = |m: Morphism| m.scale(&RatFunc::from_int(-1));
    let rot_table = [
        ("rot_jail", jail(), hourglass()),
        ("rot_hourglass", hourglass(), jail()),
        ("rot_cross", cross(), cross()),
        ("rot_h", h_diagram(), i_diagram()),
        ("rot_i", i_diagram(), h_diagram()),
        ("rot_dotcross", dotcross(), neg(dotcross())),
    ];
    for (name, f, want) in rot_table {
        let ok = f.rot().structural_equal(&want);
        r.equal(format!("rotswitch.{name}"), true, ok, Source::Published);
    }
    let switch_table = [
        ("switch_jail", jail(), cross()),
        ("switch_cross", cross(), jail()),
        ("switch_hourglass", hourglass(), hourglass()),
        ("switch_h", h_diagram(), neg(dotcross())),
        ("switch_dotcross", dotcross(), neg(h_diagram())),
        ("switch_i", i_diagram(), neg(i_diagram())),
    ];
    for (name, f, want) in switch_table {
        let ok = f.switch().map(|s| s.structural_equal(&want)).unwrap_or(false);
        r.equal(format!("rotswitch.{name}"), true, ok, Source::Published);
    }
    let mut suite = bigfive();
    suite.extend(cat::particles());
    suite.push(cat::dotcross());
    suite.push(cat::pentagon_rhs());
    let full_turn = suite.iter().all(|f| {
        let k = f.inputs() + f.outputs();
        (0..k).fold(f.clone(), |g, _| g.rot()).structural_equal(f)
    });
    r.equal("rotswitch.full_rotation_is_identity", true, full_turn, Source::Identity);
    let involution = suite.iter().all(|f| {
        f.switch()
            .and_then(|g| g.switch())
            .map(|g| g.structural_equal(f))
            .unwrap_or(false)
    });
    r.equal("rotswitch.switch_is_involution", true, involution, Source::Identity);
    r
}

fn dims() -> Report {
    let mut r = Report::new("dims");
    for kind in RootType::EXCEPTIONAL {
        let rs = RootSystem::new(kind);
        r.equal(
            format!("dims.{kind}.hom_2_2"),
            5,
            rs.dim_hom_adjoint(2, 2),
            Source::Published,
        );
        r.equal(
            format!("dims.{kind}.hom_2_3"),
            16,
            rs.dim_hom_adjoint(2, 3),
            Source::Published,
        );
    }
    let a1 = RootSystem::new(RootType::A1);
    r.equal("dims.A1.hom_2_2", 3, a1.dim_hom_adjoint(2, 2), Source::Published);
    let g2 = RootSystem::new(RootType::G2);
    let seven = g2.fundamental(0);
    r.equal(
        "dims.G2.seven_dim",
        num_bigint::BigInt::from(7),
        g2.weyl_dimension(&seven),
        Source::Identity,
    );
    r.equal(
        "dims.G2.seven_squared_end",
        4,
        g2.dim_hom(&seven, 2, 2),
        Source::Published,
    );
    r
}

fn g2_oracle() -> Report {
    let mut r = Report::new("g2-oracle");
    let s = g2_structure();
    r.named("g2", g2_checks(&s), Source::Identity);
    let model = TensorModel::adjoint(&s);
    let delta = int(14);
    let mut ev = Evaluator::new(RuleSet::quotient());
    let mut compare = |r: &mut Report, id: String, m: &Morphism| {
        let symbolic = ev
            .closed_value(m)
            .map_err(|e| e.to_string())
            .and_then(|v| v.eval_at(&delta).map_err(|e| e.to_string()));
        let numeric = closed_value_numeric(m, &model).map_err(|e| e.to_string());
        match (symbolic, numeric) {
            (Ok(a), Ok(b)) => r.equal(id, a, b, Source::Computed),
            (Err(e), _) | (_, Err(e)) => r.fail(id, "value", e, Source::Computed),
        }
    };
    for (name, m) in [
        ("circle", cat::circle()),
        ("theta", cat::theta()),
        ("tetrahedron", cat::tetrahedron()),
    ] {
        compare(&mut r, format!("g2.{name}"), &m);
    }
    for (label, basis) in [("gram5", cat::bigfive()), ("gram16", cat::particles())] {
        let n = basis.len();
        let mut agree = 0;
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i..n {
                let closed = basis[i].pair_close(&basis[j]).expect("profiles agree");
                let mut sub = Report::new("");
                compare(&mut sub, format!("({},{})", i + 1, j + 1), &closed);
                if sub.passed {
                    agree += 1;
                } else {
                    bad.extend(
                        sub.lines
                            .into_iter()
                            .map(|l| format!("{} symbolic {} numeric {}", l.id, l.expected, l.computed)),
                    );
                }
            }
        }
        let total = n * (n + 1) / 2;
        let detail = if bad.is_empty() {
            format!("{agree} of {total} pairings agree")
        } else {
            bad.join("; ")
        };
        r.check(
            format!("g2.{label}_pairings"),
            format!("{total} of {total} pairings agree"),
            detail,
            Source::Computed,
            agree == total,
        );
    }
    for (name, lhs, rhs) in [
        ("magic", cat::dotcross(), cat::magic_rhs()),
        ("square", cat::square(), cat::square_rhs()),
        ("pentagon", cat::pentagon(), cat::pentagon_rhs()),
    ] {
        let diff = lhs.sub(&rhs).expect("profiles agree");
        match phi_tensor(&diff, &model) {
            Ok(t) => r.check(
                format!("g2.{name}_tensor"),
                "zero tensor",
                format!("{} nonzero entries", t.entries.len()),
                Source::Computed,
                t.is_zero(),
            ),
            Err(e) => r.fail(format!("g2.{name}_tensor"), "zero tensor", e, Source::Computed),
        }
    }
    r
}

fn octonion() -> Report {
    let mut r = Report::new("octonion");
    r.named("octonion", octonion_checks(), Source::Published);
    let model = TensorModel::octonion();
    let lhs = cat::i_diagram().add(&cat::h_diagram()).expect("profiles agree");
    let rhs = cat::cross()
        .scale(&RatFunc::from_int(2))
        .sub(&cat::jail())
        .and_then(|m| m.sub(&cat::hourglass()))
        .expect("profiles agree");
    match phi_tensor(&lhs.sub(&rhs).expect("profiles agree"), &model) {
        Ok(t) => r.check(
            "octonion.i_plus_h",
            "zero tensor",
            format!("{} nonzero entries", t.entries.len()),
            Source::Published,
            t.is_zero(),
        ),
        Err(e) => r.fail("octonion.i_plus_h", "zero tensor", e, Source::Published),
    }
    for (name, m, want) in [("loop", cat::circle(), int(7)), ("theta", cat::theta(), int(-42))] {
        match closed_value_numeric(&m, &model) {
            Ok(v) => r.equal(format!("octonion.{name}"), want, v, Source::Computed),
            Err(e) => r.fail(format!("octonion.{name}"), want, e, Source::Computed),
        }
    }
    r
}

fn tl_functor() -> Report {
    let mut r = Report::new("tl-functor");
    match tl::verify_kauff_functor() {
        Ok(checks) => r.named("tl", checks, Source::Published),
        Err(e) => r.fail("tl", "identities", e, Source::Published),
    }
    r.equal("tl.kar_hom_0_0", 1, tl::kar_hom_dim(0, 0), Source::Identity);
    r.equal("tl.kar_hom_2_2", 3, tl::kar_hom_dim(2, 2), Source::Computed);
    r.equal("tl.kar_hom_2_3", 6, tl::kar_hom_dim(2, 3), Source::Published);
    let images: Result<Vec<_>, _> = cat::particles()[..6].iter().map(tl::phi).collect();
    match images {
        Ok(imgs) => {
            let rank = tl::gauss_rank(imgs.iter().map(|f| f.coordinates()).collect());
            r.equal("tl.first_six_particles_independent", 6, rank, Source::Published);
        }
        Err(e) => r.fail("tl.first_six_particles_independent", 6, e, Source::Published),
    }
    rank3_line(&mut r);
    r
}
