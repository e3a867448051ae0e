//! Point sets in R^d: distance spectra, local distance profiles, antipodality,
//! affine machinery (span dimension, equidistant locus) and saturated-subset
//! decomposition of locally two-distance sets.

use nalgebra::{DMatrix, DVector};

use crate::error::Error;

/// Default relative tolerance for clustering squared distances into classes.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Singular values below this fraction of the largest count as zero.
pub const RANK_TOL: f64 = 1e-8;

/// A finite ordered point set in R^d with a numeric comparison policy.
#[derive(Clone, Debug)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<f64>>,
    tol: f64,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Vec<f64>>, tol: f64) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::OutOfRange("dim must be positive".into()));
        }
        if points.is_empty() {
            return Err(Error::Degenerate("empty point set".into()));
        }
        if !(tol > 0.0 && tol < 1e-3) {
            return Err(Error::OutOfRange(format!(
                "tol must lie in (0, 1e-3), got {tol}"
            )));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "point {i} has {} coordinates, expected {dim}",
                    p.len()
                )));
            }
        }
        Ok(PointSet { dim, points, tol })
    }

    pub fn with_default_tol(dim: usize, points: Vec<Vec<f64>>) -> Result<Self, Error> {
        Self::new(dim, points, DEFAULT_TOL)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn subset(&self, indices: &[usize]) -> Result<PointSet, Error> {
        let pts = indices.iter().map(|&i| self.points[i].clone()).collect();
        PointSet::new(self.dim, pts, self.tol)
    }

    pub fn squared_dist(&self, i: usize, j: usize) -> f64 {
        squared_dist(&self.points[i], &self.points[j])
    }

    pub fn dot(&self, i: usize, j: usize) -> f64 {
        self.points[i]
            .iter()
            .zip(&self.points[j])
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self, i: usize) -> f64 {
        self.dot(i, i).sqrt()
    }
}

pub fn squared_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Greedy one-dimensional clustering: sorts the values and merges adjacent
/// ones whose gap is at most `tol * max(values)`. Returns (class reps,
/// class index per input value); reps are cluster means.
fn cluster(values: &[f64], tol: f64) -> (Vec<f64>, Vec<usize>) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let max = order.last().map(|&i| values[i]).unwrap_or(0.0);
    let threshold = tol * max.abs().max(1e-300);
    let mut assignment = vec![0usize; values.len()];
    let mut reps: Vec<f64> = Vec::new();
    let mut cluster_sum = 0.0;
    let mut cluster_count = 0usize;
    let mut prev = f64::NEG_INFINITY;
    for &idx in &order {
        let v = values[idx];
        if cluster_count > 0 && v - prev > threshold {
            reps.push(cluster_sum / cluster_count as f64);
            cluster_sum = 0.0;
            cluster_count = 0;
        }
        assignment[idx] = reps.len();
        cluster_sum += v;
        cluster_count += 1;
        prev = v;
    }
    if cluster_count > 0 {
        reps.push(cluster_sum / cluster_count as f64);
    }
    (reps, assignment)
}

/// Global and per-point distance classes of a point set, over squared
/// distances.
#[derive(Clone, Debug)]
pub struct DistanceProfile {
    /// Sorted distinct squared-distance class representatives.
    pub classes: Vec<f64>,
    /// Class indices present globally (always `0..classes.len()`).
    pub global: Vec<usize>,
    /// For each point, the sorted set of class indices it sees.
    pub per_point: Vec<Vec<usize>>,
    /// Unordered pair count per class.
    pub multiplicities: Vec<usize>,
}

impl DistanceProfile {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn is_k_distance(&self, k: usize) -> bool {
        self.classes.len() == k
    }

    /// max over points of the number of distance classes seen.
    pub fn local_width(&self) -> usize {
        self.per_point.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn is_locally_k(&self, k: usize) -> bool {
        self.local_width() <= k
    }

    /// Distance (not squared) representatives.
    pub fn distance_classes(&self) -> Vec<f64> {
        self.classes.iter().map(|c| c.sqrt()).collect()
    }
}

pub fn distance_profile(x: &PointSet) -> Result<DistanceProfile, Error> {
    let n = x.len();
    if n < 2 {
        return Err(Error::Degenerate("need at least 2 points".into()));
    }
    let mut pair_values = Vec::with_capacity(n * (n - 1) / 2);
    let mut pair_index = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            pair_index[i][j] = pair_values.len();
            pair_index[j][i] = pair_values.len();
            pair_values.push(x.squared_dist(i, j));
        }
    }
    let scale = pair_values.iter().cloned().fold(0.0, f64::max);
    if pair_values.iter().any(|&v| v <= x.tol * scale) {
        return Err(Error::NotProperPointSet("coincident points".into()));
    }
    let (classes, assignment) = cluster(&pair_values, x.tol);
    let mut multiplicities = vec![0usize; classes.len()];
    for &c in &assignment {
        multiplicities[c] += 1;
    }
    let mut per_point = Vec::with_capacity(n);
    for i in 0..n {
        let mut seen: Vec<usize> = (0..n)
            .filter(|&j| j != i)
            .map(|j| assignment[pair_index[i][j]])
            .collect();
        seen.sort_unstable();
        seen.dedup();
        per_point.push(seen);
    }
    Ok(DistanceProfile {
        global: (0..classes.len()).collect(),
        classes,
        per_point,
        multiplicities,
    })
}

/// Result of the antipodality test: the pairing `i -> pairing[i]` with
/// `x_{pairing[i]} = -x_i`, and one representative per pair.
#[derive(Clone, Debug)]
pub struct AntipodalPairing {
    pub pairing: Vec<usize>,
    pub half: Vec<usize>,
}

fn common_radius(x: &PointSet) -> Result<f64, Error> {
    let norms: Vec<f64> = (0..x.len()).map(|i| x.norm(i)).collect();
    let r = norms.iter().sum::<f64>() / norms.len() as f64;
    let spread_tol = (x.tol * r.max(1.0)).max(1e-12);
    if norms.iter().any(|&v| (v - r).abs() > spread_tol * 10.0) {
        return Err(Error::NotSpherical(
            "points are not on a common origin-centered sphere".into(),
        ));
    }
    Ok(r)
}

/// Tests whether `x -> -x` permutes the set; requires all points on a common
/// origin-centered sphere.
pub fn is_antipodal(x: &PointSet) -> Result<Option<AntipodalPairing>, Error> {
    let r = common_radius(x)?;
    let n = x.len();
    let match_tol = (x.tol.sqrt() * r.max(1.0)).max(1e-9);
    let mut pairing = vec![usize::MAX; n];
    for i in 0..n {
        let neg: Vec<f64> = x.point(i).iter().map(|c| -c).collect();
        let hit = (0..n).find(|&j| squared_dist(&neg, x.point(j)).sqrt() <= match_tol);
        match hit {
            Some(j) if j != i => pairing[i] = j,
            _ => return Ok(None), // unmatched or fixed point (origin excluded by sphericity)
        }
    }
    // must be an involution
    for i in 0..n {
        if pairing[pairing[i]] != i {
            return Ok(None);
        }
    }
    let half: Vec<usize> = (0..n).filter(|&i| i < pairing[i]).collect();
    Ok(Some(AntipodalPairing { pairing, half }))
}

/// Inner-product classes of a unit-sphere point set.
#[derive(Clone, Debug)]
pub struct InnerSpectrum {
    /// Sorted distinct inner-product class representatives.
    pub classes: Vec<f64>,
    /// For each point, the sorted set of class indices it sees.
    pub per_point: Vec<Vec<usize>>,
}

pub fn inner_spectrum(x: &PointSet) -> Result<InnerSpectrum, Error> {
    let n = x.len();
    if n < 2 {
        return Err(Error::Degenerate("need at least 2 points".into()));
    }
    for i in 0..n {
        if (x.norm(i) - 1.0).abs() > (x.tol * 10.0).max(1e-9) {
            return Err(Error::NotSpherical(format!(
                "point {i} has norm {} != 1",
                x.norm(i)
            )));
        }
    }
    let mut pair_values = Vec::with_capacity(n * (n - 1) / 2);
    let mut pair_index = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            pair_index[i][j] = pair_values.len();
            pair_index[j][i] = pair_values.len();
            pair_values.push(x.dot(i, j));
        }
    }
    // shift to nonnegative before clustering so the relative merge rule
    // behaves the same as for squared distances
    let shifted: Vec<f64> = pair_values.iter().map(|v| v + 1.0).collect();
    let (reps, assignment) = cluster(&shifted, x.tol);
    let classes: Vec<f64> = reps.iter().map(|v| v - 1.0).collect();
    let mut per_point = Vec::with_capacity(n);
    for i in 0..n {
        let mut seen: Vec<usize> = (0..n)
            .filter(|&j| j != i)
            .map(|j| assignment[pair_index[i][j]])
            .collect();
        seen.sort_unstable();
        seen.dedup();
        per_point.push(seen);
    }
    Ok(InnerSpectrum { classes, per_point })
}

/// Rank of the span of `x` after translating the first point to the origin.
pub fn span_dim(x: &PointSet) -> usize {
    let n = x.len();
    if n < 2 {
        return 0;
    }
    let d = x.dim();
    let mut m = DMatrix::zeros(n - 1, d);
    for i in 1..n {
        for k in 0..d {
            m[(i - 1, k)] = x.points[i][k] - x.points[0][k];
        }
    }
    rank_of(&m)
}

fn rank_of(m: &DMatrix<f64>) -> usize {
    let svd = m.clone().svd(false, false);
    let max_sv = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    if max_sv == 0.0 {
        return 0;
    }
    svd.singular_values
        .iter()
        .filter(|&&s| s > RANK_TOL * max_sv)
        .count()
}

/// An affine subspace `base + span(directions)` with orthonormal directions.
#[derive(Clone, Debug)]
pub struct AffineSubspace {
    pub base: Vec<f64>,
    pub directions: Vec<Vec<f64>>,
    pub dim: usize,
}

impl AffineSubspace {
    /// Distance from `p` to the subspace.
    pub fn distance_to(&self, p: &[f64]) -> f64 {
        let mut v: Vec<f64> = p.iter().zip(&self.base).map(|(a, b)| a - b).collect();
        for dir in &self.directions {
            let c: f64 = v.iter().zip(dir).map(|(a, b)| a * b).sum();
            for (vi, di) in v.iter_mut().zip(dir) {
                *vi -= c * di;
            }
        }
        v.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn contains(&self, p: &[f64], tol: f64) -> bool {
        self.distance_to(p) <= tol
    }
}

/// The locus of points equidistant from all of `y`: the solution set of
/// `(y_i - y_0, x) = (|y_i|^2 - |y_0|^2)/2`. Returns `None` when the system
/// is inconsistent (no equidistant point exists).
pub fn equidistant_locus(y: &PointSet, ambient_dim: usize) -> Result<Option<AffineSubspace>, Error> {
    if y.dim() != ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "point set lives in R^{}, ambient given as R^{ambient_dim}",
            y.dim()
        )));
    }
    let n = y.len();
    let d = ambient_dim;
    if n == 1 {
        // every point is equidistant from a single point
        let mut dirs = Vec::with_capacity(d);
        for k in 0..d {
            let mut e = vec![0.0; d];
            e[k] = 1.0;
            dirs.push(e);
        }
        return Ok(Some(AffineSubspace {
            base: vec![0.0; d],
            directions: dirs,
            dim: d,
        }));
    }
    let mut a = DMatrix::zeros(n - 1, d);
    let mut c = DVector::zeros(n - 1);
    let norm0: f64 = y.point(0).iter().map(|v| v * v).sum();
    for i in 1..n {
        let normi: f64 = y.point(i).iter().map(|v| v * v).sum();
        for k in 0..d {
            a[(i - 1, k)] = y.points[i][k] - y.points[0][k];
        }
        c[i - 1] = (normi - norm0) / 2.0;
    }
    let svd = a.clone().svd(true, true);
    let max_sv = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let sv_tol = RANK_TOL * max_sv.max(1e-300);
    let rank = svd.singular_values.iter().filter(|&&s| s > sv_tol).count();
    // minimum-norm least-squares solution
    let x0 = svd
        .solve(&c, sv_tol)
        .map_err(|e| Error::Arithmetic(e.to_string()))?;
    let residual = (&a * &x0 - &c).norm();
    let scale = c.norm().max(1.0);
    if residual > (y.tol.sqrt() * scale).max(1e-8) {
        return Ok(None);
    }
    // null-space directions from the right singular vectors
    let v_t = svd.v_t.as_ref().expect("v requested");
    let mut directions = Vec::new();
    for r in 0..v_t.nrows() {
        let sv = if r < svd.singular_values.len() {
            svd.singular_values[r]
        } else {
            0.0
        };
        if sv <= sv_tol {
            directions.push(v_t.row(r).iter().cloned().collect());
        }
    }
    // v_t may have fewer than d rows when n-1 < d; complete by projecting
    // the standard basis if needed
    if directions.len() < d - rank {
        directions = null_space_basis(&a, sv_tol);
    }
    Ok(Some(AffineSubspace {
        base: x0.iter().cloned().collect(),
        dim: d - rank,
        directions,
    }))
}

fn null_space_basis(a: &DMatrix<f64>, sv_tol: f64) -> Vec<Vec<f64>> {
    let d = a.ncols();
    // orthonormal basis of the row space, then Gram-Schmidt the standard
    // basis against it
    let svd = a.clone().svd(false, true);
    let v_t = svd.v_t.unwrap();
    let mut row_space: Vec<Vec<f64>> = Vec::new();
    for r in 0..v_t.nrows() {
        if r < svd.singular_values.len() && svd.singular_values[r] > sv_tol {
            row_space.push(v_t.row(r).iter().cloned().collect());
        }
    }
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for k in 0..d {
        let mut e = vec![0.0; d];
        e[k] = 1.0;
        for prev in row_space.iter().chain(basis.iter()) {
            let c: f64 = e.iter().zip(prev).map(|(a, b)| a * b).sum();
            for (ei, pi) in e.iter_mut().zip(prev) {
                *ei -= c * pi;
            }
        }
        let norm: f64 = e.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 1e-9 {
            for ei in e.iter_mut() {
                *ei /= norm;
            }
            basis.push(e);
        }
    }
    basis
}

/// A maximal subset of points sharing one per-point distance pair, together
/// with the locus the rest of the set is confined to.
#[derive(Clone, Debug)]
pub struct SaturatedDecomposition {
    pub subset_indices: Vec<usize>,
    /// Squared-distance class representatives of the shared pair.
    pub pair: (f64, f64),
    pub subset_dim: usize,
    pub remainder_indices: Vec<usize>,
    pub remainder_locus: Option<AffineSubspace>,
    pub remainder_dim: usize,
}

/// All saturated subsets of a locally two-distance set, ordered by
/// (size desc, smaller pair representative asc). The first entry is "the"
/// saturated subset for downstream decomposition arguments.
pub fn saturated_subsets(x: &PointSet) -> Result<Vec<SaturatedDecomposition>, Error> {
    let profile = distance_profile(x)?;
    if !profile.is_locally_k(2) {
        return Err(Error::ProfileTooRich(format!(
            "some point sees {} distance classes",
            profile.local_width()
        )));
    }
    let d = x.dim();
    let mut groups: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
    for (i, seen) in profile.per_point.iter().enumerate() {
        if let [a, b] = seen.as_slice() {
            groups.entry((*a, *b)).or_default().push(i);
        }
    }
    let mut out = Vec::new();
    for (&(a, b), members) in &groups {
        if members.len() < 2 {
            continue;
        }
        let subset = x.subset(members)?;
        let subset_dim = span_dim(&subset);
        let remainder: Vec<usize> = (0..x.len()).filter(|i| !members.contains(i)).collect();
        let locus = equidistant_locus(&subset, d)?;
        if let Some(l) = &locus {
            let check_tol = (x.tol.sqrt() * scale_of(x)).max(1e-7);
            for &r in &remainder {
                if !l.contains(x.point(r), check_tol) {
                    return Err(Error::VerificationMismatch(format!(
                        "remainder point {r} off the equidistant locus of a saturated subset"
                    )));
                }
            }
        }
        let remainder_dim = if remainder.len() >= 2 {
            span_dim(&x.subset(&remainder)?)
        } else {
            0
        };
        if remainder_dim > d - subset_dim {
            return Err(Error::VerificationMismatch(format!(
                "dim(X\\Y) = {remainder_dim} exceeds d - dim(Y) = {}",
                d - subset_dim
            )));
        }
        out.push(SaturatedDecomposition {
            subset_indices: members.clone(),
            pair: (profile.classes[a], profile.classes[b]),
            subset_dim,
            remainder_indices: remainder,
            remainder_locus: locus,
            remainder_dim,
        });
    }
    out.sort_by(|x1, x2| {
        x2.subset_indices
            .len()
            .cmp(&x1.subset_indices.len())
            .then(x1.pair.0.total_cmp(&x2.pair.0))
    });
    Ok(out)
}

fn scale_of(x: &PointSet) -> f64 {
    let mut m: f64 = 1.0;
    for p in x.points() {
        for &c in p {
            m = m.max(c.abs());
        }
    }
    m
}

/// Projects a point set onto an orthonormal basis of its own span, dropping
/// dead ambient dimensions.
pub fn project_to_span(x: &PointSet) -> Result<PointSet, Error> {
    let n = x.len();
    let d = x.dim();
    let mut m = DMatrix::zeros(n, d);
    for i in 0..n {
        for j in 0..d {
            m[(i, j)] = x.point(i)[j];
        }
    }
    let svd = m.clone().svd(false, true);
    let max_sv = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let rank = svd
        .singular_values
        .iter()
        .filter(|&&s| s > RANK_TOL * max_sv)
        .count();
    let v_t = svd.v_t.unwrap();
    let mut pts = Vec::with_capacity(n);
    for i in 0..n {
        let mut p = Vec::with_capacity(rank);
        for r in 0..rank {
            let mut c = 0.0;
            for j in 0..d {
                c += m[(i, j)] * v_t[(r, j)];
            }
            p.push(c);
        }
        pts.push(p);
    }
    PointSet::new(rank, pts, x.tol())
}

/// Record of the similarity applied by [`center_and_normalize`].
#[derive(Clone, Debug)]
pub struct Similarity {
    pub center: Vec<f64>,
    pub radius: f64,
}

/// Translates a concyclic point set to its circumcenter and scales it onto
/// the unit sphere.
pub fn center_and_normalize(x: &PointSet) -> Result<(PointSet, Similarity), Error> {
    let locus = equidistant_locus(x, x.dim())?
        .ok_or_else(|| Error::NotConcyclic("no common circumscribed sphere".into()))?;
    // the circumcenter is the equidistant point inside the affine hull of X:
    // project the centroid onto the locus (whose directions are orthonormal
    // and orthogonal to the hull)
    let d = x.dim();
    let n = x.len() as f64;
    let mut centroid = vec![0.0; d];
    for p in x.points() {
        for (c, v) in centroid.iter_mut().zip(p) {
            *c += v / n;
        }
    }
    let mut center = locus.base.clone();
    for dir in &locus.directions {
        let t: f64 = (0..d).map(|i| (centroid[i] - locus.base[i]) * dir[i]).sum();
        for i in 0..d {
            center[i] += t * dir[i];
        }
    }
    let radii: Vec<f64> = x
        .points()
        .iter()
        .map(|p| squared_dist(p, &center).sqrt())
        .collect();
    let r = radii.iter().sum::<f64>() / radii.len() as f64;
    if r <= (x.tol * scale_of(x)).max(1e-12) {
        return Err(Error::Degenerate("zero circumradius".into()));
    }
    let check_tol = (x.tol.sqrt() * r).max(1e-8);
    if radii.iter().any(|&v| (v - r).abs() > check_tol) {
        return Err(Error::NotConcyclic(
            "points are not equidistant from the circumcenter".into(),
        ));
    }
    let pts: Vec<Vec<f64>> = x
        .points()
        .iter()
        .map(|p| p.iter().zip(&center).map(|(a, c)| (a - c) / r).collect())
        .collect();
    Ok((
        PointSet::new(x.dim(), pts, x.tol)?,
        Similarity { center, radius: r },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn unit_square() -> PointSet {
        PointSet::with_default_tol(
            2,
            vec![
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![1.0, 1.0],
                vec![0.0, 1.0],
            ],
        )
        .unwrap()
    }

    fn pentagon_side1() -> PointSet {
        // circumradius for side length 1
        let r = 0.5 / (std::f64::consts::PI / 5.0).sin();
        let pts = (0..5)
            .map(|j| {
                let a = 2.0 * std::f64::consts::PI * j as f64 / 5.0;
                vec![r * a.cos(), r * a.sin()]
            })
            .collect();
        PointSet::with_default_tol(2, pts).unwrap()
    }

    /// Equilateral triangle plus an outward point on a vertex-centroid line.
    fn triangle_plus_ray() -> PointSet {
        let h = 3f64.sqrt() / 2.0;
        PointSet::with_default_tol(
            2,
            vec![
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![0.5, h],
                // beyond the apex, on the line through centroid and apex
                vec![0.5, h + 0.9],
            ],
        )
        .unwrap()
    }

    #[test]
    fn square_profile() {
        let p = distance_profile(&unit_square()).unwrap();
        assert_eq!(p.class_count(), 2);
        assert!((p.classes[0] - 1.0).abs() < 1e-12);
        assert!((p.classes[1] - 2.0).abs() < 1e-12);
        assert!(p.is_k_distance(2));
        assert!(p.is_locally_k(2));
        assert_eq!(p.multiplicities, vec![4, 2]);
    }

    #[test]
    fn pentagon_profile_matches_golden_ratio() {
        let p = distance_profile(&pentagon_side1()).unwrap();
        assert_eq!(p.class_count(), 2);
        let d = p.distance_classes();
        let tau = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((d[0] - 1.0).abs() < 1e-9);
        assert!((d[1] - tau).abs() < 1e-9);
    }

    #[test]
    fn triangle_plus_ray_is_proper_locally_two() {
        let x = triangle_plus_ray();
        let p = distance_profile(&x).unwrap();
        assert_eq!(p.class_count(), 3);
        assert_eq!(p.local_width(), 2);
    }

    #[test]
    fn profile_errors() {
        let single = PointSet::with_default_tol(2, vec![vec![0.0, 0.0]]).unwrap();
        assert!(matches!(
            distance_profile(&single),
            Err(Error::Degenerate(_))
        ));
        let dup =
            PointSet::with_default_tol(2, vec![vec![0.0, 0.0], vec![0.0, 0.0], vec![1.0, 0.0]])
                .unwrap();
        assert!(matches!(
            distance_profile(&dup),
            Err(Error::NotProperPointSet(_))
        ));
    }

    #[test]
    fn multiplicities_sum_to_pair_count() {
        let x = triangle_plus_ray();
        let p = distance_profile(&x).unwrap();
        let n = x.len();
        assert_eq!(p.multiplicities.iter().sum::<usize>(), n * (n - 1) / 2);
    }

    #[test]
    fn antipodal_cross_polytope() {
        let mut pts = Vec::new();
        for k in 0..3 {
            for s in [1.0, -1.0] {
                let mut p = vec![0.0; 3];
                p[k] = s;
                pts.push(p);
            }
        }
        let x = PointSet::with_default_tol(3, pts).unwrap();
        let pairing = is_antipodal(&x).unwrap().expect("cross polytope antipodal");
        assert_eq!(pairing.half.len(), 3);
    }

    #[test]
    fn pentagon_not_antipodal() {
        let (unit, _) = center_and_normalize(&pentagon_side1()).unwrap();
        assert!(is_antipodal(&unit).unwrap().is_none());
    }

    #[test]
    fn antipodal_requires_sphere() {
        let x =
            PointSet::with_default_tol(2, vec![vec![1.0, 0.0], vec![-2.0, 0.0], vec![0.5, 0.0]])
                .unwrap();
        assert!(matches!(is_antipodal(&x), Err(Error::NotSpherical(_))));
    }

    #[test]
    fn pentagon_inner_spectrum() {
        let (unit, _) = center_and_normalize(&pentagon_side1()).unwrap();
        let s = inner_spectrum(&unit).unwrap();
        assert_eq!(s.classes.len(), 2);
        // cos 144 = -(sqrt5+1)/4, cos 72 = (sqrt5-1)/4
        let c144 = -(5f64.sqrt() + 1.0) / 4.0;
        let c72 = (5f64.sqrt() - 1.0) / 4.0;
        assert!((s.classes[0] - c144).abs() < 1e-9);
        assert!((s.classes[1] - c72).abs() < 1e-9);
    }

    #[test]
    fn simplex_inner_spectrum() {
        // regular simplex on S^2: 4 unit vectors at mutual inner product -1/3
        let x = crate::catalog::construct("regular_simplex", &[("d", 3.0)]).unwrap();
        let (unit, _) = center_and_normalize(&x).unwrap();
        let s = inner_spectrum(&unit).unwrap();
        assert_eq!(s.classes.len(), 1);
        assert!((s.classes[0] + 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn span_dims() {
        let collinear =
            PointSet::with_default_tol(3, vec![vec![0.0; 3], vec![1.0, 1.0, 0.0], vec![2.0, 2.0, 0.0]])
                .unwrap();
        assert_eq!(span_dim(&collinear), 1);
        assert_eq!(span_dim(&pentagon_side1()), 2);
        let two = PointSet::with_default_tol(5, vec![vec![0.0; 5], vec![1.0, 0.0, 0.0, 0.0, 0.0]])
            .unwrap();
        assert_eq!(span_dim(&two), 1);
    }

    #[test]
    fn locus_perpendicular_bisector() {
        let y = PointSet::with_default_tol(2, vec![vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        let l = equidistant_locus(&y, 2).unwrap().unwrap();
        assert_eq!(l.dim, 1);
        assert!((l.base[0] - 0.5).abs() < 1e-9);
        assert!(l.contains(&[0.5, 7.3], 1e-9));
        assert!(!l.contains(&[0.6, 0.0], 1e-3));
    }

    #[test]
    fn locus_triangle_axis_in_3d() {
        let h = 3f64.sqrt() / 2.0;
        let y = PointSet::with_default_tol(
            3,
            vec![
                vec![0.0, 0.0, 0.0],
                vec![1.0, 0.0, 0.0],
                vec![0.5, h, 0.0],
            ],
        )
        .unwrap();
        let l = equidistant_locus(&y, 3).unwrap().unwrap();
        assert_eq!(l.dim, 1);
        // circumcenter of the triangle, z free
        assert!(l.contains(&[0.5, h / 3.0, 2.0], 1e-8));
    }

    #[test]
    fn locus_tetrahedron_circumcenter() {
        let y = PointSet::with_default_tol(
            3,
            vec![
                vec![0.0, 0.0, 0.0],
                vec![1.0, 0.0, 0.0],
                vec![0.0, 1.0, 0.0],
                vec![0.0, 0.0, 1.0],
            ],
        )
        .unwrap();
        let l = equidistant_locus(&y, 3).unwrap().unwrap();
        assert_eq!(l.dim, 0);
        assert!(squared_dist(&l.base, &[0.5, 0.5, 0.5]).sqrt() < 1e-9);
    }

    #[test]
    fn saturated_triangle_plus_ray() {
        let x = triangle_plus_ray();
        let decs = saturated_subsets(&x).unwrap();
        assert_eq!(decs.len(), 1);
        // the base edge {A, B} shares pair {1, d(A,y)^2}
        assert_eq!(decs[0].subset_indices, vec![0, 1]);
        assert_eq!(decs[0].subset_dim, 1);
        assert!((decs[0].pair.0 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn saturated_pentagon_is_whole_set() {
        let x = pentagon_side1();
        let decs = saturated_subsets(&x).unwrap();
        assert_eq!(decs.len(), 1);
        assert_eq!(decs[0].subset_indices.len(), 5);
        assert!(decs[0].remainder_indices.is_empty());
    }

    #[test]
    fn saturated_rejects_rich_profiles() {
        // 4 generic points in the plane see 3 distances each
        let x = PointSet::with_default_tol(
            2,
            vec![
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![0.3, 1.1],
                vec![2.2, 0.7],
            ],
        )
        .unwrap();
        assert!(matches!(
            saturated_subsets(&x),
            Err(Error::ProfileTooRich(_))
        ));
    }

    #[test]
    fn center_and_normalize_square() {
        let (unit, sim) = center_and_normalize(&unit_square()).unwrap();
        assert!((sim.radius - (0.5f64).sqrt()).abs() < 1e-9);
        for i in 0..unit.len() {
            assert!((unit.norm(i) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn center_and_normalize_rejects_collinear() {
        let x =
            PointSet::with_default_tol(2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![2.0, 0.0]])
                .unwrap();
        assert!(matches!(
            center_and_normalize(&x),
            Err(Error::NotConcyclic(_))
        ));
    }

    #[test]
    fn brute_force_per_point_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..50 {
            let d = rng.gen_range(2..=4);
            let n = rng.gen_range(3..=8);
            let pts: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..d).map(|_| rng.gen_range(-2.0..2.0)).collect())
                .collect();
            let x = PointSet::with_default_tol(d, pts.clone()).unwrap();
            let p = distance_profile(&x).unwrap();
            // naive double loop with direct comparison at the same threshold
            let mut all: Vec<f64> = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    all.push(squared_dist(&pts[i], &pts[j]));
                }
            }
            let max = all.iter().cloned().fold(0.0, f64::max);
            for i in 0..n {
                let mut vals: Vec<f64> = (0..n)
                    .filter(|&j| j != i)
                    .map(|j| squared_dist(&pts[i], &pts[j]))
                    .collect();
                vals.sort_by(f64::total_cmp);
                let mut count = 1;
                for w in vals.windows(2) {
                    if w[1] - w[0] > DEFAULT_TOL * max {
                        count += 1;
                    }
                }
                assert_eq!(p.per_point[i].len(), count, "point {i}");
            }
        }
    }

    #[test]
    fn profile_invariant_under_similarity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let x = triangle_plus_ray();
        let p0 = distance_profile(&x).unwrap();
        for _ in 0..10 {
            let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let scale: f64 = rng.gen_range(0.2..5.0);
            let (c, s) = (theta.cos(), theta.sin());
            let shift = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
            let pts: Vec<Vec<f64>> = x
                .points()
                .iter()
                .map(|p| {
                    vec![
                        scale * (c * p[0] - s * p[1]) + shift[0],
                        scale * (s * p[0] + c * p[1]) + shift[1],
                    ]
                })
                .collect();
            let y = PointSet::with_default_tol(2, pts).unwrap();
            let p1 = distance_profile(&y).unwrap();
            assert_eq!(p0.class_count(), p1.class_count());
            assert_eq!(p0.multiplicities, p1.multiplicities);
            assert_eq!(p0.per_point, p1.per_point);
            for (a, b) in p0.classes.iter().zip(&p1.classes) {
                assert!((b / a - scale * scale).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn locus_dimension_identity_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let d = rng.gen_range(2..=5);
            let m = rng.gen_range(1..=d + 1);
            let pts: Vec<Vec<f64>> = (0..m)
                .map(|_| (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect())
                .collect();
            let y = PointSet::with_default_tol(d, pts).unwrap();
            if let Some(l) = equidistant_locus(&y, d).unwrap() {
                assert_eq!(l.dim, d - span_dim(&y), "m={m} d={d}");
            }
        }
    }
}
