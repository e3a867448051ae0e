//! Cardinality bounds for (locally) k-distance sets on spheres: Fisher-type
//! binomial bounds, the linear-programming bound, positive-coefficient bounds
//! (plain and antipodal) and the recursion capping proper locally two-distance
//! sets in Euclidean space.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::exact::QExt;
use crate::gegenbauer::{expand, harm_dim, GegenbauerExpansion};
use crate::poly::Poly;

fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc
}

/// N_d(k) = C(d+k-1, k) + C(d+k-2, k-1).
pub fn fisher(d: u32, k: u32) -> u128 {
    let (d, k) = (d as i64, k as i64);
    binomial(d + k - 1, k) + binomial(d + k - 2, k - 1)
}

/// N'_d(k) = 2 C(d+k-2, k-1), the antipodal variant.
pub fn fisher_antipodal(d: u32, k: u32) -> u128 {
    let (d, k) = (d as i64, k as i64);
    2 * binomial(d + k - 2, k - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Fisher,
    FisherAntipodal,
    Lp,
    PositiveCoeff,
    PositiveCoeffAntipodal,
    Musin,
    LdsRecursion,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundKind::Fisher => "fisher",
            BoundKind::FisherAntipodal => "fisher-antipodal",
            BoundKind::Lp => "lp",
            BoundKind::PositiveCoeff => "positive-coeff",
            BoundKind::PositiveCoeffAntipodal => "positive-coeff-antipodal",
            BoundKind::Musin => "musin",
            BoundKind::LdsRecursion => "lds-recursion",
        };
        f.write_str(s)
    }
}

/// Per-coefficient evidence backing a certificate.
#[derive(Clone, Debug)]
pub struct CoeffEvidence {
    pub index: usize,
    pub coeff: QExt,
    pub sign: i8,
    pub harm_dim: u128,
}

/// A named bound together with the data justifying it.
#[derive(Clone, Debug)]
pub struct BoundCertificate {
    pub kind: BoundKind,
    /// Usable integer cardinality bound (floor of `exact` when present).
    pub value: u128,
    /// Exact value before rounding, when the bound is not integral by nature.
    pub exact: Option<QExt>,
    pub dim: u32,
    pub inner: Vec<QExt>,
    pub evidence: Vec<CoeffEvidence>,
    pub warnings: Vec<String>,
}

fn evidence_for(expansion: &GegenbauerExpansion<QExt>, d: u32) -> Result<Vec<CoeffEvidence>, Error> {
    expansion
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, f)| {
            Ok(CoeffEvidence {
                index: i,
                coeff: f.clone(),
                sign: f.signum(),
                harm_dim: harm_dim(d, i as u32)?,
            })
        })
        .collect()
}

fn annihilator(inner: &[QExt]) -> Poly<QExt> {
    let mut p = Poly::one();
    for alpha in inner {
        p = p.mul(&Poly::linear_root(alpha.clone()));
    }
    p
}

/// Exact floor of a QExt value.
pub fn qext_floor(v: &QExt) -> i128 {
    let mut n = v.to_f64().floor() as i128;
    // correct any float rounding exactly
    loop {
        let lo = v.clone() - QExt::from_int(n as i64);
        if lo.is_negative() {
            n -= 1;
            continue;
        }
        let hi = QExt::from_int((n + 1) as i64) - v.clone();
        if !hi.is_positive() {
            n += 1;
            continue;
        }
        return n;
    }
}

/// Outcome of the LP bound: it only applies when `f_0 > 0` and all other
/// coefficients are nonnegative.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum LpOutcome {
    Applicable(BoundCertificate),
    NotApplicable {
        offending: Vec<CoeffEvidence>,
    },
}

/// `|X| <= F_X(1) / f_0` with `F_X(t) = prod (t - alpha)`, when the expansion
/// coefficients have the right signs.
pub fn lp_bound(inner: &[QExt], d: u32) -> Result<LpOutcome, Error> {
    if inner.is_empty() {
        return Err(Error::Degenerate("empty inner-product list".into()));
    }
    let expansion = expand(&annihilator(inner), d)?;
    let evidence = evidence_for(&expansion, d)?;
    let f0_ok = expansion.coeffs[0].is_positive();
    let rest_ok = expansion.coeffs[1..].iter().all(|f| !f.is_negative());
    if !(f0_ok && rest_ok) {
        let offending = evidence
            .into_iter()
            .filter(|e| if e.index == 0 { e.sign <= 0 } else { e.sign < 0 })
            .collect();
        return Ok(LpOutcome::NotApplicable { offending });
    }
    let exact = expansion.value_at_one() / expansion.coeffs[0].clone();
    let value = qext_floor(&exact).max(1) as u128;
    Ok(LpOutcome::Applicable(BoundCertificate {
        kind: BoundKind::Lp,
        value,
        exact: Some(exact),
        dim: d,
        inner: inner.to_vec(),
        evidence,
        warnings: Vec::new(),
    }))
}

/// `|X| <= sum of h_i over strictly positive f_i`; always applicable.
pub fn positive_coeff_bound(inner: &[QExt], d: u32) -> Result<BoundCertificate, Error> {
    if inner.is_empty() {
        return Err(Error::Degenerate("empty inner-product list".into()));
    }
    let expansion = expand(&annihilator(inner), d)?;
    let evidence = evidence_for(&expansion, d)?;
    let value = evidence
        .iter()
        .filter(|e| e.sign > 0)
        .map(|e| e.harm_dim)
        .sum();
    Ok(BoundCertificate {
        kind: BoundKind::PositiveCoeff,
        value,
        exact: None,
        dim: d,
        inner: inner.to_vec(),
        evidence,
        warnings: Vec::new(),
    })
}

/// Antipodal variant: inner products exclude -1, the annihilator has degree
/// k-1 and coefficients with index congruent to k mod 2 must vanish.
/// A parity violation is reported on the certificate, not silently ignored.
pub fn positive_coeff_bound_antipodal(
    inner_without_minus_one: &[QExt],
    d: u32,
    k: u32,
) -> Result<BoundCertificate, Error> {
    if inner_without_minus_one
        .iter()
        .any(|a| (a.clone() + QExt::from_int(1)).is_zero())
    {
        return Err(Error::OutOfRange(
            "-1 must be excluded from the antipodal inner-product list".into(),
        ));
    }
    let expansion = expand(&annihilator(inner_without_minus_one), d)?;
    let evidence = evidence_for(&expansion, d)?;
    let mut warnings = Vec::new();
    for e in &evidence {
        if (e.index as u32) % 2 == k % 2 && e.sign != 0 {
            warnings.push(format!(
                "parity violation: f_{} = {} should vanish for k = {k}",
                e.index, e.coeff
            ));
        }
    }
    let value: u128 = 2 * evidence
        .iter()
        .filter(|e| e.sign > 0)
        .map(|e| e.harm_dim)
        .sum::<u128>();
    Ok(BoundCertificate {
        kind: BoundKind::PositiveCoeffAntipodal,
        value,
        exact: None,
        dim: d,
        inner: inner_without_minus_one.to_vec(),
        evidence,
        warnings,
    })
}

/// A table value that may be an interval (e.g. the open spherical case in
/// dimension 23).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableValue {
    Exact(u64),
    Interval(u64, u64),
}

impl TableValue {
    pub fn upper(&self) -> u64 {
        match self {
            TableValue::Exact(v) => *v,
            TableValue::Interval(_, hi) => *hi,
        }
    }
}

impl fmt::Display for TableValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableValue::Exact(v) => write!(f, "{v}"),
            TableValue::Interval(lo, hi) => write!(f, "{{{lo}, {hi}}}"),
        }
    }
}

/// Shipped extremal cardinalities, filled in by the catalog module.
#[derive(Clone, Debug, Default)]
pub struct ExtremalTables {
    /// DS_d(2), maximum two-distance sets in R^d.
    pub ds2: BTreeMap<u32, u64>,
    /// DS_2(k), maximum planar k-distance sets.
    pub ds2_planar: BTreeMap<u32, u64>,
    /// DS*_d(2), maximum two-distance sets on S^{d-1}.
    pub ds_star2: BTreeMap<u32, TableValue>,
    /// LDS_d(2), maximum locally two-distance sets in R^d.
    pub lds2: BTreeMap<u32, u64>,
    /// LDS*_d(2), maximum locally two-distance sets on S^{d-1}.
    pub lds_star2: BTreeMap<u32, u64>,
    /// Named one-off values.
    pub misc: BTreeMap<&'static str, u64>,
}

/// Result of the recursion `f(d) = max_i { DS*_i(2) + LDS_{d-i}(2) }`, with
/// the generic cap C(j+2,2) substituted where no exact LDS value is shipped.
#[derive(Clone, Debug)]
pub struct LdsRecursion {
    pub dim: u32,
    pub f_d: u64,
    /// Upper bound on LDS_d(2) implied by the recursion and the DS table.
    pub cap: u64,
    /// Dimensions where the generic cap replaced an unknown exact value.
    pub generic_substitutions: Vec<u32>,
    /// Best decomposition split achieving f(d).
    pub best_split: u32,
}

fn lds_cap(j: u32, tables: &ExtremalTables, subs: &mut Vec<u32>) -> u64 {
    if let Some(&v) = tables.lds2.get(&j) {
        v
    } else {
        subs.push(j);
        (binomial(j as i64 + 2, 2)) as u64
    }
}

pub fn lds_recursion(d: u32, tables: &ExtremalTables) -> Result<LdsRecursion, Error> {
    if d < 2 {
        return Err(Error::OutOfRange("recursion needs d >= 2".into()));
    }
    let mut subs = Vec::new();
    let mut f_d = 0u64;
    let mut best_split = 1u32;
    for i in 1..d {
        let ds_star = tables
            .ds_star2
            .get(&i)
            .map(|v| v.upper())
            .unwrap_or_else(|| {
                subs.push(i);
                (i as u64 * (i as u64 + 3)) / 2 // (i^2+3i)/2 >= DS*_i(2)
            });
        let total = ds_star + lds_cap(d - i, tables, &mut subs);
        if total > f_d {
            f_d = total;
            best_split = i;
        }
    }
    let width_cap = binomial(d as i64 + 2, 2) as u64;
    if f_d > width_cap {
        return Err(Error::VerificationMismatch(format!(
            "f({d}) = {f_d} exceeds the C(d+2,2) cap {width_cap}"
        )));
    }
    let cap = match tables.ds2.get(&d) {
        Some(&ds) => ds.max(f_d),
        None => width_cap,
    };
    subs.sort_unstable();
    subs.dedup();
    Ok(LdsRecursion {
        dim: d,
        f_d,
        cap,
        generic_substitutions: subs,
        best_split,
    })
}
