use std::fmt;

use serde::Serialize;

use super::{AlgebraTag, Family};
use crate::cyclotomic::RootOrder;

const SCALAR_RELATION_B: &str =
    "x_-^l x_+^l = q^(l(l-1)) lambda^(-2l) { -(d^2)^l + q^-l D^l Q_l((q+q^-1) c / D) z - z^2 }, d^2 = c^2 - lambda^2 c2p";
const SCALAR_RELATION_F: &str =
    "x_-^l x_+^l = q^(l(l-1)) lambda^(-2l) { -1 + q^-l d^l Q_l((q+q^-1) c) z - z^2 }, d^2 = 1";

/// One family in the list of irreducible representations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub case: u8,
    pub family: String,
    pub dims: Vec<usize>,
    pub free_params: Vec<String>,
    /// Relations among `free_params`.
    pub relations: usize,
    /// Discrete labels (F, third case below dimension `l`).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub constraints: Vec<String>,
    pub exclusions: Vec<String>,
    pub notes: Vec<String>,
    /// False when the family is empty at this `l`.
    pub exists: bool,
}

impl CaseRecord {
    fn new(case: u8, family: Family, dims: Vec<usize>, free: &[&str]) -> CaseRecord {
        CaseRecord {
            case,
            family: family.name().to_string(),
            dims,
            free_params: free.iter().map(|s| s.to_string()).collect(),
            relations: 0,
            labels: Vec::new(),
            constraints: Vec::new(),
            exclusions: Vec::new(),
            notes: Vec::new(),
            exists: true,
        }
    }

    fn constraint(mut self, s: impl Into<String>) -> Self {
        self.constraints.push(s.into());
        self
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    fn relations(mut self, k: usize) -> Self {
        self.relations = k;
        self
    }

    /// Number of free parameters.
    pub fn parameter_count(&self) -> usize {
        self.free_params.len()
    }

    /// Parameters minus relations among them.
    pub fn effective_parameters(&self) -> usize {
        self.free_params.len() - self.relations
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub n: usize,
    pub l: usize,
    pub algebra: AlgebraTag,
    pub cases: Vec<CaseRecord>,
}

impl ClassificationReport {
    /// The JSON form: the list of case records.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.cases).expect("records serialize")
    }

    pub fn records_for(&self, case: u8) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(move |r| r.case == case)
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "algebra {} at n = {}, l = {}",
            self.algebra, self.n, self.l
        )?;
        for r in &self.cases {
            let dims: Vec<String> = r.dims.iter().map(|d| d.to_string()).collect();
            writeln!(
                f,
                "case {} ({}): dims [{}], {} parameters [{}]{}{}",
                r.case,
                r.family,
                dims.join(", "),
                r.parameter_count(),
                r.free_params.join(", "),
                if r.relations > 0 {
                    format!(" minus {} relation(s)", r.relations)
                } else {
                    String::new()
                },
                if r.exists { "" } else { " (empty)" }
            )?;
            if !r.labels.is_empty() {
                writeln!(f, "  labels: {}", r.labels.join(" "))?;
            }
            for s in &r.constraints {
                writeln!(f, "  constraint: {s}")?;
            }
            for s in &r.exclusions {
                writeln!(f, "  exclusion: {s}")?;
            }
            for s in &r.notes {
                writeln!(f, "  note: {s}")?;
            }
        }
        Ok(())
    }
}

/// The list of irreducible finite-dimensional families at `q^(2l) = 1`.
pub fn classify(order: &RootOrder, algebra: AlgebraTag) -> ClassificationReport {
    let cases = match algebra {
        AlgebraTag::B => classify_b(order.l()),
        AlgebraTag::A => classify_a(order.l()),
        AlgebraTag::F => classify_f(order.l()),
    };
    ClassificationReport {
        n: order.n(),
        l: order.l(),
        algebra,
        cases,
    }
}

const L2_FULL_DIM: &str = "These representations do not exist when l = 2";

fn case4_one_dim(free: &[&str], d2: &str) -> CaseRecord {
    CaseRecord::new(4, Family::OneDim, vec![1], free)
        .constraint("c - lambda x0 = 0 (z = 0)")
        .constraint(format!("x_+ x_- = c2p - lambda^-2 c^2 = -lambda^-2 {d2}"))
        .note("the l-dimensional cyclic module with z = 0 is reducible (all X0 eigenvalues equal) and splits into l of these, x'_+- = q^(+-2k) x_+-")
        .note("with c = lambda x0 the same one-dimensional formula is a representation for generic q")
}

fn classify_b(l: usize) -> Vec<CaseRecord> {
    let mut out = vec![
        CaseRecord::new(
            1,
            Family::Periodic,
            vec![l],
            &["c", "c2p", "x_+^l", "x_-^l", "z"],
        )
        .relations(1)
        .constraint(SCALAR_RELATION_B)
        .constraint("z != 0")
        .constraint("x_- != 0"),
        CaseRecord::new(2, Family::SemiPeriodic, vec![l], &["c", "z", "x_+^l"])
            .constraint("z != 0")
            .constraint("x_- = 0, x_+ != 0")
            .constraint("c2p = q^2 x0^2 - q c x0, z = (c - lambda x0)^l"),
    ];
    let below: Vec<usize> = (1..l).collect();
    let mut hw = if l == 2 {
        CaseRecord::new(3, Family::HighestWeight, below, &["c", "nu"])
            .note("at l = 2, n = 1 the constraint degenerates: a two parameter representation")
    } else {
        CaseRecord::new(3, Family::HighestWeight, below, &["nu"])
    };
    hw = hw
        .constraint("(q^2+1)c = (q^(2n)+1)nu")
        .constraint("nu != 0");
    if l.is_multiple_of(2) && l >= 4 {
        hw = hw.note(format!(
            "n = l/2 = {}: q^(2n)+1 = 0 and the constraint forces c = 0; no separate treatment is needed in B",
            l / 2
        ));
    }
    out.push(hw);
    let mut full = CaseRecord::new(3, Family::HighestWeight, vec![l], &["c", "nu"])
        .constraint("(q^2+1)c - (q^(2p)+1)nu != 0 for p = 1..l-1")
        .constraint("nu != 0");
    if l == 2 {
        full.exists = false;
        full.exclusions.push(L2_FULL_DIM.into());
    }
    out.push(full);
    out.push(case4_one_dim(&["x0", "x'_+", "x'_-"], "d^2"));
    out
}

fn classify_a(l: usize) -> Vec<CaseRecord> {
    let mut out = vec![
        CaseRecord::new(
            1,
            Family::Periodic,
            vec![l],
            &["c2p", "x_+^l", "x_-^l", "z"],
        )
        .relations(1)
        .constraint(SCALAR_RELATION_B)
        .constraint("c = 1, z != 0, x_- != 0"),
        CaseRecord::new(2, Family::SemiPeriodic, vec![l], &["z", "x_+^l"])
            .constraint("c = 1, z != 0, x_- = 0, x_+ != 0")
            .constraint("c2p = q^2 x0^2 - q x0, z = (1 - lambda x0)^l"),
    ];
    let mut below: Vec<usize> = (1..l).collect();
    let mut hw = if l == 2 {
        CaseRecord::new(3, Family::HighestWeight, below.clone(), &["nu"]).note(
            "l = 2: the dimension l/2 = 1 exclusion does not apply, since q^2+1 = 0 as well and the constraint is empty; c = 1 leaves nu free",
        )
    } else {
        CaseRecord::new(3, Family::HighestWeight, Vec::new(), &[])
    };
    hw = hw
        .constraint("c = 1, (q^2+1) = (q^(2n)+1)nu")
        .constraint("nu != 0");
    if l.is_multiple_of(2) && l >= 4 {
        below.retain(|&d| d != l / 2);
        hw.exclusions.push(format!(
            "dimension l/2 = {}: the constraint forces c = 0, so there is no representation of A with c = 1 (in B it is not necessary to distinguish this case)",
            l / 2
        ));
    }
    if l != 2 {
        hw.dims = below;
    }
    out.push(hw);
    let mut full = CaseRecord::new(3, Family::HighestWeight, vec![l], &["nu"])
        .constraint("c = 1, (q^2+1) - (q^(2p)+1)nu != 0 for p = 1..l-1");
    if l == 2 {
        full.exists = false;
        full.exclusions.push(L2_FULL_DIM.into());
    }
    out.push(full);
    out.push(case4_one_dim(&["x'_+", "x'_-"], "d^2").constraint("c = 1, x0 = lambda^-1"));
    out
}

fn classify_f(l: usize) -> Vec<CaseRecord> {
    let mut semi = CaseRecord::new(2, Family::SemiPeriodic, vec![l], &["nu", "x_+^l"])
        .constraint("c = (q nu + q^-1 nu^-1)/[2], x0 = lambda^-1 (c - nu), z = nu^l")
        .constraint("nu != 0, x_+ != 0");
    if l == 2 {
        semi = semi.note(
            "at l = 2, [2] = 0: the formula for c degenerates to nu = +-1, and c is then free",
        );
    }
    let mut out = vec![
        CaseRecord::new(1, Family::Periodic, vec![l], &["c", "x_+^l", "x_-^l", "z"])
            .relations(1)
            .constraint(SCALAR_RELATION_F)
            .constraint("z != 0, x_- != 0")
            .note("d^l is read through the parity of Q_l: the expansion only involves d^2 = 1, so no sign of d is chosen"),
        semi,
    ];
    let mut hw = CaseRecord::new(3, Family::HighestWeight, (1..l).collect(), &[])
        .constraint("[2]c = q^-1 nu + q nu^-1")
        .constraint("nu^2 = q^(2-2n)")
        .note("labeled by the dimension n and a sign epsilon with nu = epsilon q^(1-n)");
    hw.labels = (1..l)
        .flat_map(|d| {
            [
                format!("(n={d}, epsilon=+1)"),
                format!("(n={d}, epsilon=-1)"),
            ]
        })
        .collect();
    if l == 2 {
        hw.free_params.push("c".into());
        hw = hw.note("at l = 2, [2] = 0 and q^-1 nu + q nu^-1 = 0 for nu = +-1, so c is free");
    }
    out.push(hw);
    let mut full = CaseRecord::new(3, Family::HighestWeight, vec![l], &["nu"])
        .constraint("[2]c = q^-1 nu + q nu^-1")
        .constraint("nu^2 != q^(2-2p) for p = 1..l-1");
    if l == 2 {
        full.exists = false;
        full.exclusions.push(L2_FULL_DIM.into());
    }
    out.push(full);
    out.push(
        CaseRecord::new(4, Family::OneDim, vec![1], &["x0", "x_+"])
            .constraint("c = lambda x0")
            .constraint("x_+ x_- = -lambda^-2")
            .note("necessarily periodic: x_+ x_- = -lambda^-2 forces x_+- != 0"),
    );
    out
}
