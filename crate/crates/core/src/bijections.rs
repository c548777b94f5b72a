//! Executable versions of the four bijections behind the triangle's identities:
//!
//! * the four-term recurrence,
//!   `F(n,d) ∪ F(n-2d+1,d) <-> F(n-d+1,d) ∪ F(n-d,d) ∪ F(n-2d+1,d-1)`;
//! * the diagonal sums, `F(n,1) ∪ F(n-1,2) ∪ ... <-> B(n+1)`;
//! * the antidiagonal sums, `F(n,1) ∪ F(n+1,2) ∪ ... <-> P(n-1)`;
//! * conjugation between partitions whose Durfee size is not a part and `B(n)`.
//!
//! `B(n)` is the set of partitions of `n` with `mu_d = mu_{d+1} = d`.
//! Every map records the case branch it took in a [`BijectionTrace`] and
//! re-checks membership of its output.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::partition::{enumerate_partitions, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("{partition} is not in {domain}")]
    NotInDomain { partition: Partition, domain: String },
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("map produced {output} from {input}, outside {expected}")]
    BrokenInvariant { input: Partition, output: Partition, expected: String },
    #[error("round trip failed: {0}")]
    RoundTrip(String),
    #[error("unknown bijection {0:?}")]
    UnknownBijection(String),
}

/// A named set of partitions, written the way the tables write it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetLabel {
    /// partitions of `n` with fixed point `d`
    F { n: usize, d: usize },
    /// partitions of `n` with `mu_d = mu_{d+1} = d`
    B(usize),
    /// all partitions of `n`
    P(usize),
    /// partitions of `n` whose Durfee size is not a part
    A(usize),
}

impl SetLabel {
    pub fn contains(&self, p: &Partition) -> bool {
        match *self {
            SetLabel::F { n, d } => in_f(p, n, d),
            SetLabel::B(n) => in_b(p, n),
            SetLabel::P(n) => p.weight() == n,
            SetLabel::A(n) => in_a(p, n),
        }
    }
}

impl fmt::Display for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetLabel::F { n, d } => write!(f, "F({n},{d})"),
            SetLabel::B(n) => write!(f, "B({n})"),
            SetLabel::P(n) => write!(f, "P({n})"),
            SetLabel::A(n) => write!(f, "A({n})"),
        }
    }
}

/// Which branch of a map was applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// raise the first d-2 parts, turn the fixed part d-1 into two parts d
    IntoNextColumn,
    /// add another part d next to the fixed part
    AppendPart,
    /// lower the first d-1 parts by one
    LowerLeading,
    /// raise the first d-1 parts by one
    RaiseLeading,
    /// remove the part d at index d+1
    RemovePart,
    /// lower the first d-2 parts, merge the two parts d into a fixed part d-1
    IntoPreviousColumn,
    /// insert a part d as the new (d+1)-st part
    InsertPart,
    RemoveFixedPoint,
    InsertFixedPoint,
    Conjugate,
}

impl Case {
    pub fn label(self) -> &'static str {
        match self {
            Case::IntoNextColumn => "into-next-column",
            Case::AppendPart => "append-part",
            Case::LowerLeading => "lower-leading",
            Case::RaiseLeading => "raise-leading",
            Case::RemovePart => "remove-part",
            Case::IntoPreviousColumn => "into-previous-column",
            Case::InsertPart => "insert-part",
            Case::RemoveFixedPoint => "remove-fixed-point",
            Case::InsertFixedPoint => "insert-fixed-point",
            Case::Conjugate => "conjugate",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionTrace {
    pub input: Partition,
    pub source_set: SetLabel,
    pub case: Case,
    pub output: Partition,
    pub target_set: SetLabel,
}

/// The four bijections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    Recurrence,
    Diagonal,
    Antidiagonal,
    Conjugation,
}

impl Bijection {
    pub const ALL: [Bijection; 4] =
        [Bijection::Recurrence, Bijection::Diagonal, Bijection::Antidiagonal, Bijection::Conjugation];

    pub fn name(self) -> &'static str {
        match self {
            Bijection::Recurrence => "thm13",
            Bijection::Diagonal => "thm15",
            Bijection::Antidiagonal => "thm16",
            Bijection::Conjugation => "prop31",
        }
    }
}

impl FromStr for Bijection {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Bijection::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| BijectionError::UnknownBijection(s.to_string()))
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn in_f(p: &Partition, n: usize, d: usize) -> bool {
    p.weight() == n && p.fixed_point() == Some(d)
}

pub fn in_b(p: &Partition, n: usize) -> bool {
    if p.weight() != n {
        return false;
    }
    let d = p.durfee();
    d >= 1 && p.part(d) == d && p.part(d + 1) == d
}

pub fn in_a(p: &Partition, n: usize) -> bool {
    p.weight() == n && p.durfee() >= 1 && !p.contains_part(p.durfee())
}

/// Reassembles parts after a structural edit. The case analysis must already
/// have produced a nonincreasing sequence of positive parts.
fn rebuild(parts: Vec<usize>) -> Partition {
    let mut sorted = parts.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(sorted, parts, "case branch broke nonincreasing order");
    Partition::new(parts).expect("case branch produced a zero part")
}

fn shift_leading(p: &Partition, count: usize, raise: bool) -> Vec<usize> {
    let mut parts = p.parts().to_vec();
    for v in parts.iter_mut().take(count) {
        if raise {
            *v += 1;
        } else {
            *v -= 1;
        }
    }
    parts
}

fn insert_at(p: &Partition, index: usize, value: usize) -> Vec<usize> {
    let mut parts = p.parts().to_vec();
    parts.insert(index - 1, value);
    parts
}

fn remove_at(p: &Partition, index: usize) -> Vec<usize> {
    let mut parts = p.parts().to_vec();
    parts.remove(index - 1);
    parts
}

fn finish(
    input: &Partition,
    source_set: SetLabel,
    case: Case,
    output: Partition,
    target_set: SetLabel,
) -> Result<BijectionTrace, BijectionError> {
    if !target_set.contains(&output) {
        return Err(BijectionError::BrokenInvariant {
            input: input.clone(),
            output,
            expected: target_set.to_string(),
        });
    }
    Ok(BijectionTrace { input: input.clone(), source_set, case, output, target_set })
}

fn check_recurrence_params(n: usize, d: usize) -> Result<(), BijectionError> {
    if d < 2 || n < d * d {
        return Err(BijectionError::BadParameters(format!(
            "the recurrence bijection needs d >= 2 and n >= d^2, got n={n}, d={d}"
        )));
    }
    Ok(())
}

/// Sets on the three-set side of the recurrence bijection, in order
/// `F(n-2d+1,d-1)`, `F(n-d,d)`, `F(n-d+1,d)`.
pub fn recurrence_sources(n: usize, d: usize) -> [SetLabel; 3] {
    [
        SetLabel::F { n: n + 1 - 2 * d, d: d - 1 },
        SetLabel::F { n: n - d, d },
        SetLabel::F { n: n + 1 - d, d },
    ]
}

/// Sets on the two-set side, `F(n,d)` then `F(n-2d+1,d)`.
pub fn recurrence_targets(n: usize, d: usize) -> [SetLabel; 2] {
    [SetLabel::F { n, d }, SetLabel::F { n: n + 1 - 2 * d, d }]
}

/// Recurrence bijection from `F(n-2d+1,d-1) ∪ F(n-d,d) ∪ F(n-d+1,d)` into
/// `F(n,d) ∪ F(n-2d+1,d)`.
pub fn thm13_forward(lambda: &Partition, n: usize, d: usize) -> Result<BijectionTrace, BijectionError> {
    check_recurrence_params(n, d)?;
    let [prev_col, middle, upper] = recurrence_sources(n, d);
    let [main, small] = recurrence_targets(n, d);

    if prev_col.contains(lambda) {
        // (l_1+1, ..., l_{d-2}+1, d, d, l_d, ...)
        let mut parts: Vec<usize> = lambda.parts()[..d - 2].iter().map(|v| v + 1).collect();
        parts.extend([d, d]);
        parts.extend_from_slice(&lambda.parts()[d - 1..]);
        return finish(lambda, prev_col, Case::IntoNextColumn, rebuild(parts), main);
    }
    if middle.contains(lambda) {
        return if lambda.part(d - 1) == d {
            let out = rebuild(insert_at(lambda, d + 1, d));
            finish(lambda, middle, Case::AppendPart, out, main)
        } else {
            let out = rebuild(shift_leading(lambda, d - 1, false));
            finish(lambda, middle, Case::LowerLeading, out, small)
        };
    }
    if upper.contains(lambda) {
        let out = rebuild(shift_leading(lambda, d - 1, true));
        return finish(lambda, upper, Case::RaiseLeading, out, main);
    }
    Err(BijectionError::NotInDomain {
        partition: lambda.clone(),
        domain: format!("{prev_col} ∪ {middle} ∪ {upper}"),
    })
}

/// Inverse of [`thm13_forward`].
pub fn thm13_reverse(mu: &Partition, n: usize, d: usize) -> Result<BijectionTrace, BijectionError> {
    check_recurrence_params(n, d)?;
    let [prev_col, middle, upper] = recurrence_sources(n, d);
    let [main, small] = recurrence_targets(n, d);

    if small.contains(mu) {
        let out = rebuild(shift_leading(mu, d - 1, true));
        return finish(mu, small, Case::RaiseLeading, out, middle);
    }
    if main.contains(mu) {
        let before = mu.part(d - 1);
        let after = mu.part(d + 1);
        if before > d {
            let out = rebuild(shift_leading(mu, d - 1, false));
            return finish(mu, main, Case::LowerLeading, out, upper);
        }
        if after == d {
            let out = rebuild(remove_at(mu, d + 1));
            return finish(mu, main, Case::RemovePart, out, middle);
        }
        // mu_{d-1} = d, mu_{d+1} < d: (mu_1-1, ..., mu_{d-2}-1, d-1, mu_{d+1}, ...)
        let mut parts: Vec<usize> = mu.parts()[..d - 2].iter().map(|v| v - 1).collect();
        parts.push(d - 1);
        parts.extend_from_slice(&mu.parts()[d..]);
        return finish(mu, main, Case::IntoPreviousColumn, rebuild(parts), prev_col);
    }
    Err(BijectionError::NotInDomain {
        partition: mu.clone(),
        domain: format!("{main} ∪ {small}"),
    })
}

/// Inserts a part `d` as the new `(d+1)`-st part of a partition with fixed point `d`.
pub fn thm15_insert(lambda: &Partition, d: usize) -> Result<Partition, BijectionError> {
    if lambda.fixed_point() != Some(d) {
        return Err(BijectionError::NotInDomain {
            partition: lambda.clone(),
            domain: format!("partitions with fixed point {d}"),
        });
    }
    Ok(rebuild(insert_at(lambda, d + 1, d)))
}

/// Removes the part `mu_{d+1} = d` from an element of `B(n)`.
pub fn thm15_remove(mu: &Partition) -> Result<Partition, BijectionError> {
    if !in_b(mu, mu.weight()) {
        return Err(BijectionError::NotInDomain {
            partition: mu.clone(),
            domain: format!("B({})", mu.weight()),
        });
    }
    Ok(rebuild(remove_at(mu, mu.durfee() + 1)))
}

/// Diagonal bijection `F(n+1-d,d) -> B(n+1)` for the fixed point `d` of `lambda`.
pub fn thm15_forward(lambda: &Partition, n: usize) -> Result<BijectionTrace, BijectionError> {
    let d = lambda.fixed_point().ok_or_else(|| BijectionError::NotInDomain {
        partition: lambda.clone(),
        domain: "partitions with a fixed point".into(),
    })?;
    if lambda.weight() + d != n + 1 {
        return Err(BijectionError::NotInDomain {
            partition: lambda.clone(),
            domain: format!("F({},{d})", (n + 1).saturating_sub(d)),
        });
    }
    let out = thm15_insert(lambda, d)?;
    finish(lambda, SetLabel::F { n: lambda.weight(), d }, Case::InsertPart, out, SetLabel::B(n + 1))
}

pub fn thm15_reverse(mu: &Partition, n: usize) -> Result<BijectionTrace, BijectionError> {
    let source = SetLabel::B(n + 1);
    if !source.contains(mu) {
        return Err(BijectionError::NotInDomain { partition: mu.clone(), domain: source.to_string() });
    }
    let d = mu.durfee();
    let out = thm15_remove(mu)?;
    finish(mu, source, Case::RemovePart, out, SetLabel::F { n: n + 1 - d, d })
}

/// Deletes the fixed point.
pub fn thm16_remove(lambda: &Partition) -> Result<Partition, BijectionError> {
    let d = lambda.fixed_point().ok_or_else(|| BijectionError::NotInDomain {
        partition: lambda.clone(),
        domain: "partitions with a fixed point".into(),
    })?;
    Ok(rebuild(remove_at(lambda, d)))
}

/// Largest `d >= 1` with `mu_{d-1} >= d`, reading `mu_0` as infinite.
pub fn durfee_rectangle_parameter(mu: &Partition) -> usize {
    let mut d = 1;
    while mu.part(d) > d {
        d += 1;
    }
    d
}

/// Inserts a part `d` at index `d`, `d` the 1-Durfee rectangle parameter;
/// the result has fixed point `d`.
pub fn thm16_restore(mu: &Partition) -> Partition {
    let d = durfee_rectangle_parameter(mu);
    rebuild(insert_at(mu, d, d))
}

/// Antidiagonal bijection `F(n-1+d,d) -> P(n-1)`.
pub fn thm16_forward(lambda: &Partition, n: usize) -> Result<BijectionTrace, BijectionError> {
    if n == 0 {
        return Err(BijectionError::BadParameters("n must be at least 1".into()));
    }
    let out = thm16_remove(lambda)?;
    let d = lambda.fixed_point().expect("checked by thm16_remove");
    if lambda.weight() + 1 != n + d {
        return Err(BijectionError::NotInDomain {
            partition: lambda.clone(),
            domain: format!("F({},{d})", n - 1 + d),
        });
    }
    finish(lambda, SetLabel::F { n: lambda.weight(), d }, Case::RemoveFixedPoint, out, SetLabel::P(n - 1))
}

pub fn thm16_reverse(mu: &Partition, n: usize) -> Result<BijectionTrace, BijectionError> {
    if n == 0 || mu.weight() != n - 1 {
        return Err(BijectionError::NotInDomain {
            partition: mu.clone(),
            domain: format!("P({})", n.saturating_sub(1)),
        });
    }
    let out = thm16_restore(mu);
    let d = out.fixed_point().unwrap_or(0);
    finish(mu, SetLabel::P(n - 1), Case::InsertFixedPoint, out, SetLabel::F { n: n - 1 + d, d })
}

/// Conjugates a partition whose Durfee size `d` is not a part; the image has
/// `mu_d = mu_{d+1} = d`.
pub fn prop31_conjugate(lambda: &Partition) -> Result<Partition, BijectionError> {
    let n = lambda.weight();
    if !in_a(lambda, n) {
        return Err(BijectionError::NotInDomain {
            partition: lambda.clone(),
            domain: SetLabel::A(n).to_string(),
        });
    }
    let out = lambda.conjugate();
    if !in_b(&out, n) || out.durfee() != lambda.durfee() {
        return Err(BijectionError::BrokenInvariant {
            input: lambda.clone(),
            output: out,
            expected: SetLabel::B(n).to_string(),
        });
    }
    Ok(out)
}

/// Inverse of [`prop31_conjugate`].
pub fn prop31_unconjugate(mu: &Partition) -> Result<Partition, BijectionError> {
    let n = mu.weight();
    if !in_b(mu, n) {
        return Err(BijectionError::NotInDomain { partition: mu.clone(), domain: SetLabel::B(n).to_string() });
    }
    let out = mu.conjugate();
    if !in_a(&out, n) {
        return Err(BijectionError::BrokenInvariant {
            input: mu.clone(),
            output: out,
            expected: SetLabel::A(n).to_string(),
        });
    }
    Ok(out)
}

pub fn prop31_forward(lambda: &Partition) -> Result<BijectionTrace, BijectionError> {
    let n = lambda.weight();
    let out = prop31_conjugate(lambda)?;
    finish(lambda, SetLabel::A(n), Case::Conjugate, out, SetLabel::B(n))
}

pub fn prop31_reverse(mu: &Partition) -> Result<BijectionTrace, BijectionError> {
    let n = mu.weight();
    let out = prop31_unconjugate(mu)?;
    finish(mu, SetLabel::B(n), Case::Conjugate, out, SetLabel::A(n))
}

/// Elements of `set` in reverse-lexicographic order.
pub fn members(set: SetLabel) -> Vec<Partition> {
    let n = match set {
        SetLabel::F { n, .. } | SetLabel::B(n) | SetLabel::P(n) | SetLabel::A(n) => n,
    };
    enumerate_partitions(n).filter(|p| set.contains(p)).collect()
}

/// Columns `d` whose set `F(n+1-d, d)` can be nonempty.
fn diagonal_sets(n: usize) -> Vec<SetLabel> {
    (1..)
        .take_while(|&d| d * d + d <= n + 1)
        .map(|d| SetLabel::F { n: n + 1 - d, d })
        .collect()
}

fn antidiagonal_sets(n: usize) -> Vec<SetLabel> {
    (1..)
        .take_while(|&d| d * d < n + d)
        .map(|d| SetLabel::F { n: n + d - 1, d })
        .collect()
}

/// Traces in the order the worked-example tables list them: for the
/// recurrence, the reverse map over `F(n,d)` then `F(n-2d+1,d)`; otherwise the
/// forward map over the source sets by increasing `d`.
pub fn bijection_table(
    which: Bijection,
    n: usize,
    d: Option<usize>,
) -> Result<Vec<BijectionTrace>, BijectionError> {
    if n == 0 {
        return Err(BijectionError::BadParameters("n must be at least 1".into()));
    }
    match which {
        Bijection::Recurrence => {
            let d = d.ok_or_else(|| BijectionError::BadParameters("thm13 needs d".into()))?;
            check_recurrence_params(n, d)?;
            recurrence_targets(n, d)
                .into_iter()
                .flat_map(members)
                .map(|mu| thm13_reverse(&mu, n, d))
                .collect()
        }
        Bijection::Diagonal => diagonal_sets(n)
            .into_iter()
            .flat_map(members)
            .map(|l| thm15_forward(&l, n))
            .collect(),
        Bijection::Antidiagonal => antidiagonal_sets(n)
            .into_iter()
            .flat_map(members)
            .map(|l| thm16_forward(&l, n))
            .collect(),
        Bijection::Conjugation => members(SetLabel::A(n)).iter().map(prop31_forward).collect(),
    }
}

/// Sizes of both sides of a verified bijection instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoundTrip {
    pub sources: usize,
    pub targets: usize,
}

fn round_trip<F, R>(
    sources: Vec<Partition>,
    targets: Vec<Partition>,
    forward: F,
    reverse: R,
) -> Result<RoundTrip, BijectionError>
where
    F: Fn(&Partition) -> Result<BijectionTrace, BijectionError>,
    R: Fn(&Partition) -> Result<BijectionTrace, BijectionError>,
{
    let target_set: HashSet<&Partition> = targets.iter().collect();
    let mut images = HashSet::new();
    for s in &sources {
        let t = forward(s)?;
        if !target_set.contains(&t.output) {
            return Err(BijectionError::RoundTrip(format!("{s} maps outside the target side to {}", t.output)));
        }
        if !images.insert(t.output.clone()) {
            return Err(BijectionError::RoundTrip(format!("{} is hit twice", t.output)));
        }
        let back = reverse(&t.output)?;
        if &back.output != s {
            return Err(BijectionError::RoundTrip(format!("{s} -> {} -> {}", t.output, back.output)));
        }
    }
    for t in &targets {
        let s = reverse(t)?;
        let again = forward(&s.output)?;
        if &again.output != t {
            return Err(BijectionError::RoundTrip(format!("{t} -> {} -> {}", s.output, again.output)));
        }
    }
    if sources.len() != targets.len() {
        return Err(BijectionError::RoundTrip(format!(
            "{} sources but {} targets",
            sources.len(),
            targets.len()
        )));
    }
    Ok(RoundTrip { sources: sources.len(), targets: targets.len() })
}

/// Exhaustively checks the recurrence bijection for one `(n, d)`.
pub fn verify_thm13(n: usize, d: usize) -> Result<RoundTrip, BijectionError> {
    check_recurrence_params(n, d)?;
    let sources = recurrence_sources(n, d).into_iter().flat_map(members).collect();
    let targets = recurrence_targets(n, d).into_iter().flat_map(members).collect();
    round_trip(sources, targets, |l| thm13_forward(l, n, d), |m| thm13_reverse(m, n, d))
}

pub fn verify_thm15(n: usize) -> Result<RoundTrip, BijectionError> {
    let sources = diagonal_sets(n).into_iter().flat_map(members).collect();
    let targets = members(SetLabel::B(n + 1));
    round_trip(sources, targets, |l| thm15_forward(l, n), |m| thm15_reverse(m, n))
}

pub fn verify_thm16(n: usize) -> Result<RoundTrip, BijectionError> {
    if n == 0 {
        return Err(BijectionError::BadParameters("n must be at least 1".into()));
    }
    let sources = antidiagonal_sets(n).into_iter().flat_map(members).collect();
    let targets = members(SetLabel::P(n - 1));
    round_trip(sources, targets, |l| thm16_forward(l, n), |m| thm16_reverse(m, n))
}

pub fn verify_prop31(n: usize) -> Result<RoundTrip, BijectionError> {
    round_trip(members(SetLabel::A(n)), members(SetLabel::B(n)), prop31_forward, prop31_reverse)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn thm13_examples() {
        let t = thm13_forward(&p("1111"), 7, 2).unwrap();
        assert_eq!((t.case, t.output.clone(), t.target_set), (Case::IntoNextColumn, p("22111"), SetLabel::F { n: 7, d: 2 }));
        let t = thm13_forward(&p("42"), 7, 2).unwrap();
        assert_eq!((t.case, t.output), (Case::RaiseLeading, p("52")));
        let t = thm13_forward(&p("32"), 7, 2).unwrap();
        assert_eq!((t.case, t.output, t.target_set), (Case::LowerLeading, p("22"), SetLabel::F { n: 4, d: 2 }));

        let t = thm13_reverse(&p("322"), 7, 2).unwrap();
        assert_eq!((t.case, t.output), (Case::LowerLeading, p("222")));
        let t = thm13_reverse(&p("2221"), 7, 2).unwrap();
        assert_eq!((t.case, t.output), (Case::RemovePart, p("221")));
    }

    #[test]
    fn thm13_rejects() {
        assert!(matches!(thm13_forward(&p("7"), 7, 2), Err(BijectionError::NotInDomain { .. })));
        assert!(matches!(thm13_reverse(&p("331"), 7, 2), Err(BijectionError::NotInDomain { .. })));
        assert!(matches!(thm13_forward(&p("1"), 3, 2), Err(BijectionError::BadParameters(_))));
        assert!(matches!(thm13_forward(&p("1"), 7, 1), Err(BijectionError::BadParameters(_))));
    }

    #[test]
    fn thm15_examples() {
        assert_eq!(thm15_insert(&p("52"), 2).unwrap(), p("522"));
        assert_eq!(thm15_insert(&p("1^8"), 1).unwrap(), p("1^9"));
        assert!(thm15_insert(&p("311"), 2).is_err());
        assert_eq!(thm15_remove(&p("4221")).unwrap(), p("421"));
        assert!(thm15_remove(&p("333")).is_err());
    }

    #[test]
    fn thm16_examples() {
        assert_eq!(thm16_remove(&p("333")).unwrap(), p("33"));
        assert_eq!(thm16_restore(&p("6")), p("62"));
        assert_eq!(thm16_restore(&Partition::empty()), p("1"));
        assert!(thm16_remove(&p("311")).is_err());
    }

    #[test]
    fn prop31_examples() {
        assert_eq!(prop31_conjugate(&p("33")).unwrap(), p("222"));
        assert_eq!(prop31_conjugate(&p("2")).unwrap(), p("11"));
        assert!(prop31_conjugate(&p("31")).is_err());
        assert_eq!(prop31_unconjugate(&p("222")).unwrap(), p("33"));
    }

    #[test]
    fn labels() {
        assert_eq!(SetLabel::F { n: 7, d: 2 }.to_string(), "F(7,2)");
        assert_eq!(SetLabel::B(9).to_string(), "B(9)");
        assert_eq!(SetLabel::P(6).to_string(), "P(6)");
        for b in Bijection::ALL {
            assert_eq!(b.name().parse::<Bijection>().unwrap(), b);
        }
        assert!("thm14".parse::<Bijection>().is_err());
    }

    #[test]
    fn small_round_trips() {
        assert_eq!(verify_thm13(7, 2).unwrap(), RoundTrip { sources: 7, targets: 7 });
        assert_eq!(verify_thm15(8).unwrap().targets, 7);
        assert_eq!(verify_thm16(7).unwrap().targets, 11);
        assert_eq!(verify_prop31(9).unwrap().sources, 7);
    }
}
