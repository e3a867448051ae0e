//! Weighted spherical design verification and the canonical weight
//! construction for bound-attaining locally k-distance sets.
//!
//! The design criterion is never checked against an explicit harmonic basis;
//! by the addition formula it reduces to the vanishing of the moment sums
//! `M_i = sum_{x,y} w(x) w(y) G_i^(d)((x,y))`, each of which is a squared
//! matrix norm and hence nonnegative.

use crate::bounds;
use crate::error::Error;
use crate::exact::QExt;
use crate::gegenbauer::{expand, gegenbauer_eval, harm_dim};
use crate::geometry::{
    center_and_normalize, distance_profile, inner_spectrum, is_antipodal, project_to_span,
    PointSet,
};
use crate::poly::Poly;

/// A unit-sphere point set with positive weights summing to one.
#[derive(Clone, Debug)]
pub struct WeightedPointSet {
    base: PointSet,
    weights: Vec<f64>,
}

impl WeightedPointSet {
    pub fn new(base: PointSet, weights: Vec<f64>) -> Result<Self, Error> {
        if weights.len() != base.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} weights for {} points",
                weights.len(),
                base.len()
            )));
        }
        if weights.iter().any(|&w| w <= 0.0) {
            return Err(Error::OutOfRange("weights must be positive".into()));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > 1e-6 {
            return Err(Error::OutOfRange(format!("weights sum to {sum}, not 1")));
        }
        for i in 0..base.len() {
            if (base.norm(i) - 1.0).abs() > 1e-6 {
                return Err(Error::NotSpherical(format!("point {i} not on unit sphere")));
            }
        }
        Ok(WeightedPointSet { base, weights })
    }

    pub fn uniform(base: PointSet) -> Result<Self, Error> {
        let n = base.len();
        Self::new(base, vec![1.0 / n as f64; n])
    }

    pub fn base(&self) -> &PointSet {
        &self.base
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// Moment sums M_1..M_t and the inferred design strength.
#[derive(Clone, Debug)]
pub struct MomentReport {
    pub strength_checked: u32,
    pub moments: Vec<f64>,
    /// Scale-aware zero thresholds, one per moment.
    pub thresholds: Vec<f64>,
    /// Largest t' <= t with M_1..M_t' all below threshold.
    pub verdict: u32,
}

impl MomentReport {
    pub fn is_design_of_strength(&self, t: u32) -> bool {
        self.verdict >= t
    }
}

pub fn moment_sums(w: &WeightedPointSet, t: u32) -> Result<MomentReport, Error> {
    if t == 0 {
        return Err(Error::OutOfRange("strength must be >= 1".into()));
    }
    let d = w.base.dim() as u32;
    let n = w.base.len();
    let mut dots = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..n {
            dots[i][j] = if i == j { 1.0 } else { w.base.dot(i, j) };
        }
    }
    let wsq: f64 = w.weights.iter().map(|v| v * v).sum();
    let mut moments = Vec::with_capacity(t as usize);
    let mut thresholds = Vec::with_capacity(t as usize);
    for i in 1..=t {
        let mut m = 0.0;
        for a in 0..n {
            for b in 0..n {
                m += w.weights[a] * w.weights[b] * gegenbauer_eval::<f64>(d, i, &dots[a][b])?;
            }
        }
        moments.push(m);
        thresholds.push(1e-10 * wsq * harm_dim(d, i)? as f64);
    }
    let mut verdict = 0u32;
    for (i, (m, th)) in moments.iter().zip(&thresholds).enumerate() {
        if m.abs() <= *th {
            verdict = i as u32 + 1;
        } else {
            break;
        }
    }
    Ok(MomentReport {
        strength_checked: t,
        moments,
        thresholds,
        verdict,
    })
}

/// Exact moment sums from a Gram matrix of inner products and exact weights.
pub fn moment_sums_exact(
    gram: &[Vec<QExt>],
    weights: &[QExt],
    d: u32,
    t: u32,
) -> Result<Vec<QExt>, Error> {
    let n = gram.len();
    if weights.len() != n || gram.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("gram/weights shape".into()));
    }
    let mut out = Vec::with_capacity(t as usize);
    for i in 1..=t {
        let mut m = QExt::from_int(0);
        for a in 0..n {
            for b in 0..n {
                let g = gegenbauer_eval::<QExt>(d, i, &gram[a][b])?;
                m = m + weights[a].clone() * weights[b].clone() * g;
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// Tightness classification for a verified t-design: the cardinality must
/// meet the Fisher lower bound N_d(t/2) (even t) or N'_d((t+1)/2) (odd t).
pub fn is_tight(n: usize, d: u32, t: u32) -> bool {
    let bound = if t.is_multiple_of(2) {
        bounds::fisher(d, t / 2)
    } else {
        bounds::fisher_antipodal(d, t.div_ceil(2))
    };
    n as u128 == bound
}

#[derive(Clone, Debug)]
pub struct DesignVerdict {
    pub is_design: bool,
    pub tight: bool,
    pub report: MomentReport,
}

pub fn is_weighted_design(w: &WeightedPointSet, t: u32) -> Result<DesignVerdict, Error> {
    let report = moment_sums(w, t)?;
    let is_design = report.is_design_of_strength(t);
    let tight = is_design && is_tight(w.base.len(), w.base.dim() as u32, t);
    Ok(DesignVerdict {
        is_design,
        tight,
        report,
    })
}

/// Outcome of the canonical weight construction `w(x) = f_k^(x)`.
#[derive(Clone, Debug)]
pub struct DesignWeights {
    pub weights: Vec<f64>,
    pub weight_sum: f64,
    /// Whether |X| = N_d(k) (resp. N'_d(k)), the hypothesis under which the
    /// construction is guaranteed to produce a tight design.
    pub hypotheses_met: bool,
    pub report: Option<MomentReport>,
    pub design_strength_claimed: u32,
    pub tight: bool,
}

fn interpolation_poly(inner_classes: &[f64], k: u32) -> Result<Poly<f64>, Error> {
    let deficiency = k as i64 - inner_classes.len() as i64;
    if deficiency < 0 {
        return Err(Error::ProfileTooRich(format!(
            "point sees {} inner-product classes, more than k = {k}",
            inner_classes.len()
        )));
    }
    let mut p: Poly<f64> = Poly::one();
    for &alpha in inner_classes {
        p = p.mul(&Poly::linear_root(alpha).scale(&(1.0 / (1.0 - alpha))));
    }
    Ok(p.shift(deficiency as usize))
}

/// Builds the weights `w(x) = f_k^(x)` from the per-point interpolation
/// polynomials `F_x`. On a set attaining N_d(k) this yields a tight weighted
/// 2k-design; below the bound the weights are still returned as diagnostics.
pub fn design_weights(x: &PointSet, k: u32) -> Result<DesignWeights, Error> {
    let d = x.dim() as u32;
    let spectrum = inner_spectrum(x)?;
    let profile = distance_profile(x)?;
    if !profile.is_locally_k(k as usize) {
        return Err(Error::ProfileTooRich(format!(
            "not locally {k}-distance (local width {})",
            profile.local_width()
        )));
    }
    let mut weights = Vec::with_capacity(x.len());
    for seen in &spectrum.per_point {
        let classes: Vec<f64> = seen.iter().map(|&c| spectrum.classes[c]).collect();
        let f = expand(&interpolation_poly(&classes, k)?, d)?;
        let fk = f.coeffs[k as usize];
        if fk <= 0.0 {
            return Err(Error::WeightConstructionFailed(format!(
                "leading coefficient f_{k} = {fk} is not positive"
            )));
        }
        weights.push(fk);
    }
    let weight_sum: f64 = weights.iter().sum();
    let hypotheses_met = x.len() as u128 == bounds::fisher(d, k);
    let strength = 2 * k;
    let (report, tight) = if (weight_sum - 1.0).abs() <= 1e-6 {
        let w = WeightedPointSet::new(x.clone(), weights.clone())?;
        let v = is_weighted_design(&w, strength)?;
        (Some(v.report), v.tight)
    } else {
        (None, false)
    };
    Ok(DesignWeights {
        weights,
        weight_sum,
        hypotheses_met,
        report,
        design_strength_claimed: strength,
        tight,
    })
}

/// Antipodal variant: weights `f_{k-1}^(y) / 2` on both `y` and `-y`, built
/// from the even interpolation polynomials over squared inner products.
pub fn design_weights_antipodal(x: &PointSet, k: u32) -> Result<DesignWeights, Error> {
    let d = x.dim() as u32;
    let pairing = is_antipodal(x)?
        .ok_or_else(|| Error::OutOfRange("set is not antipodal".into()))?;
    let profile = distance_profile(x)?;
    if !profile.is_locally_k(k as usize) {
        return Err(Error::ProfileTooRich(format!(
            "not locally {k}-distance (local width {})",
            profile.local_width()
        )));
    }
    let n = x.len();
    // squared inner products (y, x)^2 over x != +-y, clustered per half-set point
    let mut weights = vec![0.0f64; n];
    for &yi in &pairing.half {
        let partner = pairing.pairing[yi];
        let mut sq: Vec<f64> = (0..n)
            .filter(|&j| j != yi && j != partner)
            .map(|j| {
                let v = x.dot(yi, j);
                v * v
            })
            .collect();
        sq.sort_by(f64::total_cmp);
        let mut classes: Vec<f64> = Vec::new();
        let merge = (x.tol().sqrt()).max(1e-7);
        for v in sq {
            match classes.last() {
                Some(&last) if v - last <= merge => {}
                _ => classes.push(v),
            }
        }
        let nonzero: Vec<f64> = classes.iter().cloned().filter(|&c| c > merge).collect();
        let exponent = k as i64 - 1 - 2 * nonzero.len() as i64;
        if exponent < 0 {
            return Err(Error::ProfileTooRich(format!(
                "half-set point sees {} nonzero squared inner classes, too many for k = {k}",
                nonzero.len()
            )));
        }
        // F_y(t) = t^e * prod (t^2 - a^2)/(1 - a^2)
        let mut p: Poly<f64> = Poly::one();
        for &a2 in &nonzero {
            let factor = Poly::new(vec![-a2, 0.0, 1.0]).scale(&(1.0 / (1.0 - a2)));
            p = p.mul(&factor);
        }
        let p = p.shift(exponent as usize);
        let f = expand(&p, d)?;
        let flead = f.coeffs[(k - 1) as usize];
        if flead <= 0.0 {
            return Err(Error::WeightConstructionFailed(format!(
                "leading coefficient f_{} = {flead} is not positive",
                k - 1
            )));
        }
        weights[yi] = flead / 2.0;
        weights[partner] = flead / 2.0;
    }
    let weight_sum: f64 = weights.iter().sum();
    let hypotheses_met = n as u128 == bounds::fisher_antipodal(d, k);
    let strength = 2 * k - 1;
    let (report, tight) = if (weight_sum - 1.0).abs() <= 1e-6 {
        let w = WeightedPointSet::new(x.clone(), weights.clone())?;
        let v = is_weighted_design(&w, strength)?;
        (Some(v.report), v.tight)
    } else {
        (None, false)
    };
    Ok(DesignWeights {
        weights,
        weight_sum,
        hypotheses_met,
        report,
        design_strength_claimed: strength,
        tight,
    })
}

/// Exact weight construction from a Gram matrix in Q(sqrt m).
pub fn design_weights_exact(gram: &[Vec<QExt>], d: u32, k: u32) -> Result<Vec<QExt>, Error> {
    let n = gram.len();
    let mut weights = Vec::with_capacity(n);
    for (i, row) in gram.iter().enumerate() {
        let mut classes: Vec<QExt> = Vec::new();
        for (j, v) in row.iter().enumerate() {
            if j != i && !classes.contains(v) {
                classes.push(v.clone());
            }
        }
        let deficiency = k as i64 - classes.len() as i64;
        if deficiency < 0 {
            return Err(Error::ProfileTooRich(format!(
                "row {i} has {} inner classes, more than k = {k}",
                classes.len()
            )));
        }
        let mut p: Poly<QExt> = Poly::one();
        for alpha in &classes {
            let denom = QExt::from_int(1) - alpha.clone();
            p = p.mul(&Poly::linear_root(alpha.clone()).scale(&(QExt::from_int(1) / denom)));
        }
        let p = p.shift(deficiency as usize);
        let f = expand(&p, d)?;
        let fk = f.coeffs[k as usize].clone();
        if !fk.is_positive() {
            return Err(Error::WeightConstructionFailed(format!(
                "exact leading coefficient f_{k} = {fk} is not positive at row {i}"
            )));
        }
        weights.push(fk);
    }
    Ok(weights)
}

/// Derived section of a tight spherical 5-design: the points at one
/// non-antipodal distance from a base point form a tight 4-design on the
/// sphere one dimension down.
pub fn tight_section(
    w: &WeightedPointSet,
    base_index: usize,
    class: usize,
) -> Result<PointSet, Error> {
    let x = w.base();
    let d = x.dim() as u32;
    // the input must be a verified tight 5-design, i.e. an antipodal
    // three-distance set attaining N'_d(3)
    if x.len() as u128 != bounds::fisher_antipodal(d, 3) {
        return Err(Error::StrengthMismatch(format!(
            "|X| = {} != N'_{d}(3) = {}",
            x.len(),
            bounds::fisher_antipodal(d, 3)
        )));
    }
    let verdict = is_weighted_design(w, 5)?;
    if !(verdict.is_design && verdict.tight) {
        return Err(Error::StrengthMismatch(
            "input is not a verified tight 5-design".into(),
        ));
    }
    let profile = distance_profile(x)?;
    if profile.class_count() != 3 {
        return Err(Error::StrengthMismatch(format!(
            "expected 3 distance classes, found {}",
            profile.class_count()
        )));
    }
    if class >= 2 {
        return Err(Error::OutOfRange(
            "class selects one of the two non-antipodal distance classes (0 or 1)".into(),
        ));
    }
    // the largest squared class is the antipodal diameter
    let n = x.len();
    let target = class;
    let p2 = distance_profile(x)?;
    let members: Vec<usize> = (0..n)
        .filter(|&j| j != base_index)
        .filter(|&j| {
            let sq = x.squared_dist(base_index, j);
            // classify against the global reps
            let mut best = 0;
            let mut best_gap = f64::INFINITY;
            for (c, rep) in p2.classes.iter().enumerate() {
                let gap = (sq - rep).abs();
                if gap < best_gap {
                    best_gap = gap;
                    best = c;
                }
            }
            best == target
        })
        .collect();
    let section = x.subset(&members)?;
    let (unit, _) = center_and_normalize(&section)?;
    let flat = project_to_span(&unit)?;
    // must be a two-distance set attaining N_{d-1}(2), i.e. a tight 4-design
    let sp = distance_profile(&flat)?;
    if !sp.is_k_distance(2) {
        return Err(Error::VerificationMismatch(format!(
            "section has {} distance classes, expected 2",
            sp.class_count()
        )));
    }
    if flat.len() as u128 != bounds::fisher(d - 1, 2) {
        return Err(Error::VerificationMismatch(format!(
            "section has {} points, expected N_{}(2) = {}",
            flat.len(),
            d - 1,
            bounds::fisher(d - 1, 2)
        )));
    }
    let wsec = WeightedPointSet::uniform(flat.clone())?;
    let v = is_weighted_design(&wsec, 4)?;
    if !(v.is_design && v.tight) {
        return Err(Error::VerificationMismatch(format!(
            "section (n={}, dim={}) is not a tight 4-design: moments {:?} vs thresholds {:?}",
            flat.len(),
            flat.dim(),
            v.report.moments,
            v.report.thresholds
        )));
    }
    Ok(flat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn unit_pentagon() -> PointSet {
        let pts = (0..5)
            .map(|j| {
                let a = 2.0 * std::f64::consts::PI * j as f64 / 5.0;
                vec![a.cos(), a.sin()]
            })
            .collect();
        PointSet::with_default_tol(2, pts).unwrap()
    }

    #[test]
    fn pentagon_is_tight_four_design() {
        let w = WeightedPointSet::uniform(unit_pentagon()).unwrap();
        let r = moment_sums(&w, 5).unwrap();
        assert_eq!(r.verdict, 4);
        assert!(r.moments[4] > 1e-3); // M_5 clearly nonzero
        let v = is_weighted_design(&w, 4).unwrap();
        assert!(v.is_design && v.tight);
    }

    #[test]
    fn icosahedron_is_tight_five_design() {
        let x = catalog::construct("icosahedron", &[]).unwrap();
        let w = WeightedPointSet::uniform(x).unwrap();
        let r = moment_sums(&w, 6).unwrap();
        assert_eq!(r.verdict, 5);
        assert!(r.moments[5].abs() > 1e-3);
    }

    #[test]
    fn single_point_fails_strength_one() {
        let x = PointSet::with_default_tol(3, vec![vec![0.0, 0.0, 1.0]]).unwrap();
        let w = WeightedPointSet::new(x, vec![1.0]).unwrap();
        let r = moment_sums(&w, 1).unwrap();
        assert!((r.moments[0] - 3.0).abs() < 1e-12); // M_1 = G_1(1) = d
        assert_eq!(r.verdict, 0);
    }

    #[test]
    fn cross_polytope_tight_three_design() {
        let x = catalog::construct("cross_polytope", &[("d", 4.0)]).unwrap();
        let w = WeightedPointSet::uniform(x).unwrap();
        let v = is_weighted_design(&w, 3).unwrap();
        assert!(v.is_design && v.tight);
    }

    #[test]
    fn square_tight_three_design() {
        let pts = vec![
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![-1.0, 0.0],
            vec![0.0, -1.0],
        ];
        let x = PointSet::with_default_tol(2, pts).unwrap();
        let v = is_weighted_design(&WeightedPointSet::uniform(x).unwrap(), 3).unwrap();
        assert!(v.is_design && v.tight);
    }

    #[test]
    fn simplex_design_weights_uniform() {
        // regular simplex attains N_d(1) = d+1; weights must be 1/(d+1)
        for d in 2..=6usize {
            let x = catalog::construct("regular_simplex", &[("d", d as f64)]).unwrap();
            let (unit, _) = center_and_normalize(&x).unwrap();
            let out = design_weights(&unit, 1).unwrap();
            assert!(out.hypotheses_met);
            assert!(out.tight, "d={d}");
            for w in &out.weights {
                assert!((w - 1.0 / (d as f64 + 1.0)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn pentagon_design_weights() {
        let out = design_weights(&unit_pentagon(), 2).unwrap();
        assert!(out.hypotheses_met);
        assert!(out.tight);
        for w in &out.weights {
            assert!((w - 0.2).abs() < 1e-9);
        }
    }

    #[test]
    fn below_bound_weights_are_diagnostic_only() {
        // equilateral triangle plus a fourth concyclic point: locally
        // 2-distance on a circle but far from attaining N_2(2) = 5
        let pts = vec![
            vec![1.0, 0.0],
            vec![-0.5, 3f64.sqrt() / 2.0],
            vec![-0.5, -3f64.sqrt() / 2.0],
        ];
        let x = PointSet::with_default_tol(2, pts).unwrap();
        let out = design_weights(&x, 2).unwrap();
        assert!(!out.hypotheses_met);
        assert!(!out.tight);
    }

    #[test]
    fn antipodal_weights_cross_polytope() {
        let x = catalog::construct("cross_polytope", &[("d", 3.0)]).unwrap();
        let out = design_weights_antipodal(&x, 2).unwrap();
        assert!(out.hypotheses_met);
        assert!(out.tight);
        for w in &out.weights {
            assert!((w - 1.0 / 6.0).abs() < 1e-9);
        }
    }

    #[test]
    fn antipodal_weights_icosahedron() {
        let x = catalog::construct("icosahedron", &[]).unwrap();
        let out = design_weights_antipodal(&x, 3).unwrap();
        assert!(out.hypotheses_met);
        assert!(out.tight);
        for w in &out.weights {
            assert!((w - 1.0 / 12.0).abs() < 1e-9);
        }
    }

    #[test]
    fn hexagon_antipodal_five_design() {
        let pts = (0..6)
            .map(|j| {
                let a = std::f64::consts::PI * j as f64 / 3.0;
                vec![a.cos(), a.sin()]
            })
            .collect();
        let x = PointSet::with_default_tol(2, pts).unwrap();
        let out = design_weights_antipodal(&x, 3).unwrap();
        assert!(out.hypotheses_met); // 6 = N'_2(3)
        assert!(out.tight);
        for w in &out.weights {
            assert!((w - 1.0 / 6.0).abs() < 1e-9);
        }
    }

    #[test]
    fn exact_pentagon_weights_and_moments() {
        let gram = catalog::pentagon_gram();
        let weights = design_weights_exact(&gram, 2, 2).unwrap();
        for w in &weights {
            assert_eq!(*w, QExt::ratio(1, 5));
        }
        let moments = moment_sums_exact(&gram, &weights, 2, 4).unwrap();
        for (i, m) in moments.iter().enumerate() {
            assert!(m.is_zero(), "M_{} = {m} should vanish exactly", i + 1);
        }
    }

    #[test]
    fn section_of_icosahedron_is_pentagon() {
        let x = catalog::construct("icosahedron", &[]).unwrap();
        let w = WeightedPointSet::uniform(x).unwrap();
        for class in [0, 1] {
            let sec = tight_section(&w, 0, class).unwrap();
            assert_eq!(sec.len(), 5);
            assert_eq!(sec.dim(), 2);
            let p = distance_profile(&sec).unwrap();
            assert!(p.is_k_distance(2));
        }
    }

    #[test]
    fn section_rejects_wrong_strength() {
        let x = catalog::construct("cross_polytope", &[("d", 3.0)]).unwrap();
        let w = WeightedPointSet::uniform(x).unwrap();
        assert!(matches!(
            tight_section(&w, 0, 0),
            Err(Error::StrengthMismatch(_))
        ));
    }

    #[test]
    fn moment_nonnegativity_fuzz_small() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let d = rng.gen_range(2..=5);
            let n = rng.gen_range(2..=12);
            let pts: Vec<Vec<f64>> = (0..n)
                .map(|_| {
                    let v: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0f64)).collect();
                    let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt().max(1e-6);
                    v.iter().map(|c| c / norm).collect()
                })
                .collect();
            let x = PointSet::with_default_tol(d, pts).unwrap();
            let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.01..1.0)).collect();
            let s: f64 = raw.iter().sum();
            let w =
                WeightedPointSet::new(x, raw.into_iter().map(|v| v / s).collect()).unwrap();
            let r = moment_sums(&w, 6).unwrap();
            for m in &r.moments {
                assert!(*m >= -1e-10, "moment {m} negative beyond tolerance");
            }
        }
    }

    /// Independent oracle: a weighted set is a t-design iff the weighted sums
    /// of all monomials of degree <= t equal the sphere averages, which for
    /// S^1 and S^2 have the classical double-factorial closed form.
    fn monomial_design_check(w: &WeightedPointSet, t: u32) -> bool {
        fn double_factorial(n: i64) -> f64 {
            let mut acc = 1.0;
            let mut k = n;
            while k > 1 {
                acc *= k as f64;
                k -= 2;
            }
            acc
        }
        let d = w.base().dim();
        let exps: Vec<Vec<u32>> = match d {
            2 => (0..=t)
                .flat_map(|a| (0..=t - a).map(move |b| vec![a, b]))
                .collect(),
            3 => (0..=t)
                .flat_map(|a| {
                    (0..=t - a).flat_map(move |b| (0..=t - a - b).map(move |c| vec![a, b, c]))
                })
                .collect(),
            _ => panic!("oracle only for d = 2, 3"),
        };
        for e in exps {
            let deg: u32 = e.iter().sum();
            if deg == 0 {
                continue;
            }
            let avg = if e.iter().any(|&x| x % 2 == 1) {
                0.0
            } else {
                let num: f64 = e.iter().map(|&x| double_factorial(x as i64 - 1)).product();
                let den = if d == 2 {
                    double_factorial(deg as i64)
                } else {
                    double_factorial(deg as i64 + 1)
                };
                num / den
            };
            let sum: f64 = w
                .base()
                .points()
                .iter()
                .zip(w.weights())
                .map(|(p, wt)| {
                    wt * p
                        .iter()
                        .zip(&e)
                        .map(|(c, &x)| c.powi(x as i32))
                        .product::<f64>()
                })
                .sum();
            if (sum - avg).abs() > 1e-9 {
                return false;
            }
        }
        true
    }

    #[test]
    fn moment_check_agrees_with_quadrature_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        // random small sets: should agree (almost surely "not a design")
        for _ in 0..20 {
            let d = rng.gen_range(2..=3);
            let n = rng.gen_range(2..=6);
            let pts: Vec<Vec<f64>> = (0..n)
                .map(|_| {
                    let v: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0f64)).collect();
                    let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt().max(1e-6);
                    v.iter().map(|c| c / norm).collect()
                })
                .collect();
            let x = PointSet::with_default_tol(d, pts).unwrap();
            let w = WeightedPointSet::uniform(x).unwrap();
            for t in 1..=3u32 {
                let ours = moment_sums(&w, t).unwrap().is_design_of_strength(t);
                assert_eq!(ours, monomial_design_check(&w, t), "t={t}");
            }
        }
        // and on genuine designs
        let pent = WeightedPointSet::uniform(unit_pentagon()).unwrap();
        assert!(monomial_design_check(&pent, 4));
        assert!(!monomial_design_check(&pent, 5));
        let ico =
            WeightedPointSet::uniform(catalog::construct("icosahedron", &[]).unwrap()).unwrap();
        assert!(monomial_design_check(&ico, 5));
    }
}
