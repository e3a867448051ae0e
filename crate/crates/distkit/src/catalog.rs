//! Constructors for the explicit extremal configurations, graph-based
//! two-distance embeddings, and the shipped tables of known maximum
//! cardinalities.

use nalgebra::DMatrix;

use crate::bounds::{ExtremalTables, TableValue};
use crate::designs::{is_weighted_design, WeightedPointSet};
use crate::error::Error;
use crate::exact::QExt;
use crate::geometry::{
    center_and_normalize, distance_profile, is_antipodal, project_to_span, PointSet,
};

const PHI: f64 = 1.618033988749894848204586834365638118;

fn param(params: &[(&str, f64)], key: &str) -> Option<f64> {
    params.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
}

fn uparam(params: &[(&str, f64)], key: &str) -> Result<usize, Error> {
    let v = param(params, key)
        .ok_or_else(|| Error::OutOfRange(format!("missing parameter '{key}'")))?;
    if v < 0.0 || v.fract() != 0.0 {
        return Err(Error::OutOfRange(format!("parameter '{key}' = {v} not a nonnegative integer")));
    }
    Ok(v as usize)
}

/// Vertices of a regular d-simplex on the unit sphere of R^d.
pub fn regular_simplex(d: usize) -> Result<PointSet, Error> {
    if d < 1 {
        return Err(Error::OutOfRange("simplex needs d >= 1".into()));
    }
    // e_i centered in R^(d+1), then flattened to the d-dimensional span
    let mut pts = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut p = vec![-1.0 / (d as f64 + 1.0); d + 1];
        p[i] += 1.0;
        pts.push(p);
    }
    let embedded = PointSet::with_default_tol(d + 1, pts)?;
    let flat = project_to_span(&embedded)?;
    let scale = (d as f64 / (d as f64 + 1.0)).sqrt();
    let unit: Vec<Vec<f64>> = flat
        .points()
        .iter()
        .map(|p| p.iter().map(|c| c / scale).collect())
        .collect();
    PointSet::with_default_tol(d, unit)
}

/// Midpoints of the edges of a regular d-simplex: d(d+1)/2 points on a
/// common sphere, two-distance for d >= 3.
pub fn midpoint_simplex(d: usize) -> Result<PointSet, Error> {
    let simplex = regular_simplex(d)?;
    let mut pts = Vec::new();
    for i in 0..simplex.len() {
        for j in (i + 1)..simplex.len() {
            pts.push(
                simplex
                    .point(i)
                    .iter()
                    .zip(simplex.point(j))
                    .map(|(a, b)| (a + b) / 2.0)
                    .collect(),
            );
        }
    }
    PointSet::with_default_tol(d, pts)
}

/// `U_d` plus a point on a vertex-center line, at signed parameter `s`
/// (the vertex itself sits at s = 1, the center at s = 0).
pub fn simplex_plus_ray(d: usize, s: f64) -> Result<PointSet, Error> {
    let simplex = regular_simplex(d)?;
    let mut pts: Vec<Vec<f64>> = simplex.points().to_vec();
    let y: Vec<f64> = simplex.point(0).iter().map(|c| c * s).collect();
    pts.push(y);
    PointSet::with_default_tol(d, pts)
}

/// The 2(k-1)-point locally two-distance, globally k-distance chain on the
/// unit sphere of R^(2k-3).
pub fn chain_2k(k: usize) -> Result<PointSet, Error> {
    if k < 3 {
        return Err(Error::OutOfRange("chain needs k >= 3".into()));
    }
    let dim = 2 * k - 3;
    let mut pts = Vec::with_capacity(2 * (k - 1));
    let e = |idx: usize, a: f64, idx2: usize, b: f64| {
        let mut p = vec![0.0; dim];
        p[idx] = a;
        if a != b || idx != idx2 {
            p[idx2] = b;
        }
        p
    };
    pts.push(e(0, 1.0, 0, 1.0));
    pts.push(e(0, -1.0, 0, -1.0));
    for j in 2..k {
        let jf = j as f64;
        let r = (jf * jf - 1.0).sqrt();
        // indices 2j-2, 2j-1 in 1-based coordinates -> 2j-3, 2j-2 here
        pts.push(e(2 * j - 3, 1.0 / jf, 2 * j - 2, r / jf));
        pts.push(e(2 * j - 3, 1.0 / jf, 2 * j - 2, -r / jf));
    }
    PointSet::with_default_tol(dim, pts)
}

/// Parameter values where `simplex_plus_ray(d, s)` loses its third
/// distance class (or the added point collides with a vertex), located by
/// a sign-change scan with bisection refinement.
pub fn simplex_ray_exceptional_s(d: usize, lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let df = d as f64;
    let edge_sq = 2.0 + 2.0 / df;
    // squared distances from s*x_0: (1-s)^2 to x_0, 1 + s^2 + 2s/d to the
    // rest; exceptional when any two of the three classes coincide
    let gap = move |s: f64| -> f64 {
        let a = (1.0 - s) * (1.0 - s);
        let b = 1.0 + s * s + 2.0 * s / df;
        (a - b) * (a - edge_sq) * (b - edge_sq)
    };
    let mut roots: Vec<f64> = Vec::new();
    let mut s = lo;
    while s < hi {
        let (mut x0, mut x1) = (s, (s + step).min(hi));
        let (f0, f1) = (gap(x0), gap(x1));
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0 * f1 < 0.0 {
            for _ in 0..80 {
                let mid = 0.5 * (x0 + x1);
                if gap(x0) * gap(mid) <= 0.0 {
                    x1 = mid;
                } else {
                    x0 = mid;
                }
            }
            roots.push(0.5 * (x0 + x1));
        }
        s += step;
    }
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
    roots
}

/// Regular pentagon with side length 1.
pub fn pentagon() -> PointSet {
    let r = 0.5 / (std::f64::consts::PI / 5.0).sin();
    let pts = (0..5)
        .map(|j| {
            let a = 2.0 * std::f64::consts::PI * j as f64 / 5.0;
            vec![r * a.cos(), r * a.sin()]
        })
        .collect();
    PointSet::with_default_tol(2, pts).expect("pentagon is well formed")
}

/// `{+-e_i}` in R^d.
pub fn cross_polytope(d: usize) -> Result<PointSet, Error> {
    if d < 2 {
        return Err(Error::OutOfRange("cross polytope needs d >= 2".into()));
    }
    let mut pts = Vec::with_capacity(2 * d);
    for i in 0..d {
        for s in [1.0, -1.0] {
            let mut p = vec![0.0; d];
            p[i] = s;
            pts.push(p);
        }
    }
    PointSet::with_default_tol(d, pts)
}

/// Right prism over an equilateral triangle with square sides.
pub fn prism3() -> PointSet {
    let h = 3f64.sqrt() / 2.0;
    let tri = [[0.0, 0.0], [1.0, 0.0], [0.5, h]];
    let mut pts = Vec::new();
    for z in [0.0, 1.0] {
        for t in tri {
            pts.push(vec![t[0], t[1], z]);
        }
    }
    PointSet::with_default_tol(3, pts).expect("prism is well formed")
}

/// Unit-sphere vertices of the regular icosahedron.
pub fn icosahedron() -> PointSet {
    let norm = (1.0 + PHI * PHI).sqrt();
    let mut pts = Vec::with_capacity(12);
    for (a, b) in [(1.0, PHI), (1.0, -PHI), (-1.0, PHI), (-1.0, -PHI)] {
        pts.push(vec![0.0, a / norm, b / norm]);
        pts.push(vec![a / norm, b / norm, 0.0]);
        pts.push(vec![b / norm, 0.0, a / norm]);
    }
    PointSet::with_default_tol(3, pts).expect("icosahedron is well formed")
}

/// All two-distance 6-point subsets of the icosahedron, deduplicated by
/// distance-profile signature.
pub fn icosahedron_two_distance_subsets() -> Vec<PointSet> {
    let ico = icosahedron();
    let mut reps: Vec<(Vec<u64>, PointSet)> = Vec::new();
    let idx: Vec<usize> = (0..12).collect();
    let mut choose = vec![0usize; 6];
    fn rec(
        idx: &[usize],
        choose: &mut Vec<usize>,
        start: usize,
        depth: usize,
        ico: &PointSet,
        reps: &mut Vec<(Vec<u64>, PointSet)>,
    ) {
        if depth == 6 {
            let sub = ico.subset(choose).unwrap();
            if let Ok(p) = distance_profile(&sub) {
                if p.class_count() == 2 {
                    // signature: class ratio and multiplicities, plus the
                    // multiset of per-point class counts
                    let ratio = (p.classes[1] / p.classes[0] * 1e9).round() as u64;
                    let mut sig = vec![ratio];
                    sig.extend(p.multiplicities.iter().map(|&m| m as u64));
                    let mut per: Vec<u64> =
                        p.per_point.iter().map(|s| s.len() as u64).collect();
                    per.sort_unstable();
                    sig.extend(per);
                    if !reps.iter().any(|(s, _)| *s == sig) {
                        reps.push((sig, sub));
                    }
                }
            }
            return;
        }
        for i in start..idx.len() {
            choose[depth] = idx[i];
            rec(idx, choose, i + 1, depth + 1, ico, reps);
        }
    }
    rec(&idx, &mut choose, 0, 0, &ico, &mut reps);
    reps.into_iter().map(|(_, x)| x).collect()
}

/// The 16-point optimal two-distance set in R^5 given by the Clebsch graph.
pub fn clebsch16() -> PointSet {
    let mut pts = Vec::with_capacity(16);
    for i in 0..5 {
        let mut p = vec![1.0; 5];
        p[i] = 0.0;
        pts.push(p); // -e_i + sum e_k
    }
    for i in 0..5 {
        for j in (i + 1)..5 {
            let mut p = vec![0.0; 5];
            p[i] = 1.0;
            p[j] = 1.0;
            pts.push(p);
        }
    }
    pts.push(vec![0.0; 5]);
    PointSet::with_default_tol(5, pts).expect("clebsch set is well formed")
}

/// The 29-point optimal two-distance set in R^7.
pub fn d7_29() -> PointSet {
    let c = (3.0 + 2f64.sqrt()) / 7.0;
    let b = (2.0 + 3.0 * 2f64.sqrt()) / 7.0;
    let mut pts = Vec::with_capacity(29);
    for i in 0..7 {
        let mut p = vec![c; 7];
        p[i] -= 1.0;
        pts.push(p);
    }
    for i in 0..7 {
        for j in (i + 1)..7 {
            let mut p = vec![0.0; 7];
            p[i] = 1.0;
            p[j] = 1.0;
            pts.push(p);
        }
    }
    pts.push(vec![b; 7]);
    PointSet::with_default_tol(7, pts).expect("29-point set is well formed")
}

/// The 45-point two-distance set X_1 union X_2 in R^8, with squared
/// distance classes {2, 4}.
pub fn d8_45() -> PointSet {
    let mut x1: Vec<Vec<f64>> = Vec::with_capacity(9);
    for i in 0..8 {
        let mut p = vec![-1.0 / 12.0; 8];
        p[i] += 1.0;
        x1.push(p);
    }
    x1.push(vec![-1.0 / 3.0; 8]);
    let mut pts = x1.clone();
    for i in 0..x1.len() {
        for j in (i + 1)..x1.len() {
            pts.push(
                x1[i]
                    .iter()
                    .zip(&x1[j])
                    .map(|(a, b)| -(a + b))
                    .collect(),
            );
        }
    }
    PointSet::with_default_tol(8, pts).expect("45-point set is well formed")
}

/// Unit square with an outward equilateral-triangle apex on each side:
/// the extremal 8-point planar locally three-distance configuration.
pub fn figure1() -> PointSet {
    let h = 3f64.sqrt() / 2.0;
    PointSet::with_default_tol(
        2,
        vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
            vec![0.5, -h],
            vec![1.0 + h, 0.5],
            vec![0.5, 1.0 + h],
            vec![-h, 0.5],
        ],
    )
    .expect("figure is well formed")
}

/// Simple undirected graph given by an adjacency matrix.
#[derive(Clone, Debug)]
pub struct GraphSpec {
    pub n: usize,
    pub adjacency: Vec<Vec<bool>>,
}

impl GraphSpec {
    pub fn new(adjacency: Vec<Vec<bool>>) -> Result<Self, Error> {
        let n = adjacency.len();
        for (i, row) in adjacency.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch("adjacency not square".into()));
            }
            if row[i] {
                return Err(Error::OutOfRange(format!("loop at vertex {i}")));
            }
            for j in 0..n {
                if adjacency[i][j] != adjacency[j][i] {
                    return Err(Error::OutOfRange(format!(
                        "adjacency not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(GraphSpec { n, adjacency })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in edges {
            if a == b || a >= n || b >= n {
                return Err(Error::OutOfRange(format!("bad edge ({a},{b})")));
            }
            adj[a][b] = true;
            adj[b][a] = true;
        }
        Self::new(adj)
    }
}

/// Kneser graph K(5,2): vertices are 2-subsets of a 5-set, adjacent when
/// disjoint.
pub fn petersen_graph() -> GraphSpec {
    let verts: Vec<(usize, usize)> = (0..5)
        .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
        .collect();
    let mut edges = Vec::new();
    for (a, &(i, j)) in verts.iter().enumerate() {
        for (b, &(k, l)) in verts.iter().enumerate().skip(a + 1) {
            if i != k && i != l && j != k && j != l {
                edges.push((a, b));
            }
        }
    }
    GraphSpec::from_edges(10, &edges).expect("petersen construction")
}

/// Clebsch graph on Z_2^4: adjacent when the difference is a standard basis
/// vector or the all-ones vector.
pub fn clebsch_graph() -> GraphSpec {
    let gens = [0b0001u8, 0b0010, 0b0100, 0b1000, 0b1111];
    let mut edges = Vec::new();
    for a in 0..16u8 {
        for b in (a + 1)..16 {
            if gens.contains(&(a ^ b)) {
                edges.push((a as usize, b as usize));
            }
        }
    }
    GraphSpec::from_edges(16, &edges).expect("clebsch construction")
}

/// Schlafli graph: the 27 lines on a cubic surface, adjacent when skew.
/// Lines are a_1..a_6, b_1..b_6, c_ij (i<j) with the classical incidences.
pub fn schlafli_graph() -> GraphSpec {
    #[derive(Clone, Copy, PartialEq)]
    enum Line {
        A(usize),
        B(usize),
        C(usize, usize),
    }
    let mut lines = Vec::with_capacity(27);
    for i in 0..6 {
        lines.push(Line::A(i));
    }
    for i in 0..6 {
        lines.push(Line::B(i));
    }
    for i in 0..6 {
        for j in (i + 1)..6 {
            lines.push(Line::C(i, j));
        }
    }
    let meet = |x: Line, y: Line| -> bool {
        match (x, y) {
            (Line::A(_), Line::A(_)) | (Line::B(_), Line::B(_)) => false,
            (Line::A(i), Line::B(j)) | (Line::B(j), Line::A(i)) => i != j,
            (Line::A(i), Line::C(j, k))
            | (Line::C(j, k), Line::A(i))
            | (Line::B(i), Line::C(j, k))
            | (Line::C(j, k), Line::B(i)) => i == j || i == k,
            (Line::C(i, j), Line::C(k, l)) => i != k && i != l && j != k && j != l,
        }
    };
    let mut edges = Vec::new();
    for a in 0..27 {
        for b in (a + 1)..27 {
            if !meet(lines[a], lines[b]) {
                edges.push((a, b));
            }
        }
    }
    GraphSpec::from_edges(27, &edges).expect("schlafli construction")
}

/// Eigenvalues below `-PSD_TOL * max` make the candidate Gram infeasible.
pub const PSD_TOL: f64 = 1e-9;

/// Result of embedding a graph as a spherical two-distance set.
#[derive(Clone, Debug)]
pub enum GraphEmbedOutcome {
    Embedded(PointSet),
    Infeasible { min_eigenvalue: f64 },
}

/// Tries `M = I + a*A + b*(J - I - A)` as a Gram matrix of unit vectors;
/// on success factors it into points in R^rank(M).
pub fn graph_embed(g: &GraphSpec, a: f64, b: f64) -> Result<GraphEmbedOutcome, Error> {
    let n = g.n;
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = if i == j {
                1.0
            } else if g.adjacency[i][j] {
                a
            } else {
                b
            };
        }
    }
    let eig = m.symmetric_eigen();
    let max_eig = eig.eigenvalues.iter().cloned().fold(0.0f64, f64::max);
    let min_eig = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    if min_eig < -PSD_TOL * max_eig.max(1.0) {
        return Ok(GraphEmbedOutcome::Infeasible {
            min_eigenvalue: min_eig,
        });
    }
    let keep: Vec<usize> = (0..n)
        .filter(|&i| eig.eigenvalues[i] > PSD_TOL * max_eig.max(1.0))
        .collect();
    let rank = keep.len();
    let mut pts = Vec::with_capacity(n);
    for v in 0..n {
        let p: Vec<f64> = keep
            .iter()
            .map(|&r| eig.eigenvalues[r].sqrt() * eig.eigenvectors[(v, r)])
            .collect();
        pts.push(p);
    }
    Ok(GraphEmbedOutcome::Embedded(PointSet::with_default_tol(
        rank, pts,
    )?))
}

/// The (adjacent, non-adjacent) inner-product pair that embeds each shipped
/// graph as its optimal two-distance set.
pub fn embed_pair(graph: &str) -> Result<(f64, f64), Error> {
    match graph {
        "petersen" => Ok((-2.0 / 3.0, 1.0 / 6.0)),
        "clebsch" => Ok((-3.0 / 5.0, 1.0 / 5.0)),
        "schlafli" => Ok((0.25, -0.5)),
        _ => Err(Error::UnknownName(format!("graph '{graph}'"))),
    }
}

/// The 27-point optimal two-distance set in R^6, from the Schlafli graph.
pub fn schlafli27() -> Result<PointSet, Error> {
    let (a, b) = embed_pair("schlafli")?;
    match graph_embed(&schlafli_graph(), a, b)? {
        GraphEmbedOutcome::Embedded(x) => Ok(x),
        GraphEmbedOutcome::Infeasible { min_eigenvalue } => Err(Error::VerificationMismatch(
            format!("schlafli Gram not PSD (min eigenvalue {min_eigenvalue})"),
        )),
    }
}

/// Named constructor dispatch for the CLI and the verification suite.
pub fn construct(name: &str, params: &[(&str, f64)]) -> Result<PointSet, Error> {
    match name {
        "regular_simplex" => regular_simplex(uparam(params, "d")?),
        "simplex_plus_ray" => {
            let d = uparam(params, "d")?;
            let s = param(params, "s").unwrap_or(-0.7);
            simplex_plus_ray(d, s)
        }
        "chain_2k" => chain_2k(uparam(params, "k")?),
        "pentagon" => Ok(pentagon()),
        "octahedron" => cross_polytope(3),
        "prism3" => Ok(prism3()),
        "icosahedron" => Ok(icosahedron()),
        "icosahedron_subset" => {
            let idx = uparam(params, "index")?;
            let subs = icosahedron_two_distance_subsets();
            subs.into_iter()
                .nth(idx)
                .ok_or_else(|| Error::OutOfRange(format!("subset index {idx} out of range")))
        }
        "midpoint_simplex" => midpoint_simplex(uparam(params, "d")?),
        "petersen10" => midpoint_simplex(4),
        "clebsch16" => Ok(clebsch16()),
        "schlafli27" => schlafli27(),
        "d7_29" => Ok(d7_29()),
        "d8_45" => Ok(d8_45()),
        "cross_polytope" => cross_polytope(uparam(params, "d")?),
        "figure1" => Ok(figure1()),
        _ => Err(Error::UnknownName(format!("catalog entry '{name}'"))),
    }
}

/// Exact Gram matrix of the unit pentagon over Q(sqrt 5).
pub fn pentagon_gram() -> Vec<Vec<QExt>> {
    let c72 = (QExt::sqrt_int(5) - QExt::from_int(1)) / QExt::from_int(4);
    let c144 = -(QExt::sqrt_int(5) + QExt::from_int(1)) / QExt::from_int(4);
    let mut gram = vec![vec![QExt::from_int(0); 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            let gap = (i as i64 - j as i64).rem_euclid(5);
            gram[i][j] = match gap {
                0 => QExt::from_int(1),
                1 | 4 => c72.clone(),
                _ => c144.clone(),
            };
        }
    }
    gram
}

/// Snaps a float Gram matrix onto a list of exact inner-product classes.
pub fn exact_gram_from_classes(
    x: &PointSet,
    classes: &[QExt],
) -> Result<Vec<Vec<QExt>>, Error> {
    let n = x.len();
    let mut gram = vec![vec![QExt::from_int(0); n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = if i == j { 1.0 } else { x.dot(i, j) };
            let one = QExt::from_int(1);
            let mut best: Option<(&QExt, f64)> = None;
            for c in std::iter::once(&one).chain(classes.iter()) {
                let gap = (c.to_f64() - v).abs();
                if best.map(|(_, g)| gap < g).unwrap_or(true) {
                    best = Some((c, gap));
                }
            }
            let (c, gap) = best.expect("classes nonempty");
            if gap > 1e-6 {
                return Err(Error::VerificationMismatch(format!(
                    "inner product {v} at ({i},{j}) matches no exact class"
                )));
            }
            gram[i][j] = c.clone();
        }
    }
    Ok(gram)
}

/// Exact Gram matrix of the unit icosahedron over Q(sqrt 5).
pub fn icosahedron_gram() -> Result<Vec<Vec<QExt>>, Error> {
    let s = QExt::from_int(1) / QExt::sqrt_int(5);
    exact_gram_from_classes(
        &icosahedron(),
        &[s.clone(), -s, QExt::from_int(-1)],
    )
}

/// The shipped tables of known extremal cardinalities.
pub fn known_tables() -> ExtremalTables {
    let mut t = ExtremalTables::default();
    for (d, v) in [(1, 3), (2, 5), (3, 6), (4, 10), (5, 16), (6, 27), (7, 29), (8, 45)] {
        t.ds2.insert(d, v);
    }
    for (k, v) in [(1, 3), (2, 5), (3, 7), (4, 9), (5, 12)] {
        t.ds2_planar.insert(k, v);
    }
    // spherical two-distance maxima: DS*_1(2) = 2 (a 0-sphere has 2 points),
    // DS*_d(2) = DS_d(2) for 2 <= d <= 6, d(d+1)/2 in the Musin range,
    // 275 at d = 22 and an unresolved interval at d = 23
    t.ds_star2.insert(1, TableValue::Exact(2));
    for d in 2..=6u32 {
        t.ds_star2.insert(d, TableValue::Exact(t.ds2[&d]));
    }
    for d in 7..40u32 {
        let v = match d {
            22 => TableValue::Exact(275),
            23 => TableValue::Interval(276, 277),
            _ => TableValue::Exact((d as u64 * (d as u64 + 1)) / 2),
        };
        t.ds_star2.insert(d, v);
    }
    // locally two-distance maxima in R^d: equal to DS_d(2) except d = 3
    for (d, v) in [(1, 3), (2, 5), (3, 7), (4, 10), (5, 16), (6, 27), (7, 29), (8, 45)] {
        t.lds2.insert(d, v);
    }
    // spherical locally two-distance maxima: equal to DS*_d(2) except at
    // d in {3, 7, 23}
    t.lds_star2.insert(1, 2);
    for d in 2..40u32 {
        let v = match d {
            3 => 7,
            7 => 29,
            23 => 277,
            _ => t.ds_star2[&d].upper(),
        };
        t.lds_star2.insert(d, v);
    }
    t.misc.insert("DS_3(3)", 12);
    // the optimal 8-point planar locally three-distance value; the source
    // statement labels it LDS_3(3) but concerns planar sets
    t.misc.insert("LDS_planar(3) [stated as LDS_3(3)]", 8);
    t
}

/// What a catalog entry is expected to look like after the full pipeline.
#[derive(Clone, Debug)]
pub struct Expected {
    pub cardinality: usize,
    pub class_count: usize,
    pub local_width: usize,
    pub spherical: bool,
    pub antipodal: bool,
    /// Exact design strength of the uniform weighting, when claimed.
    pub design_strength: Option<u32>,
    /// Exact squared-distance class representatives, when the construction
    /// pins them.
    pub squared_classes: Option<Vec<f64>>,
    /// Expected sum over points of per-point class counts, when claimed.
    pub per_point_sum: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: Vec<(&'static str, f64)>,
    pub expected: Expected,
    pub citation: &'static str,
}

/// Every verifiable entry in the catalog.
pub fn entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let e = |name: &'static str,
             params: Vec<(&'static str, f64)>,
             expected: Expected,
             citation: &'static str| CatalogEntry {
        name,
        params,
        expected,
        citation,
    };
    out.push(e(
        "pentagon",
        vec![],
        Expected {
            cardinality: 5,
            class_count: 2,
            local_width: 2,
            spherical: true,
            antipodal: false,
            design_strength: Some(4),
            squared_classes: Some(vec![1.0, (3.0 + 5f64.sqrt()) / 2.0]),
            per_point_sum: None,
        },
        "optimal planar two-distance set",
    ));
    out.push(e(
        "octahedron",
        vec![],
        Expected {
            cardinality: 6,
            class_count: 2,
            local_width: 2,
            spherical: true,
            antipodal: true,
            design_strength: Some(3),
            squared_classes: Some(vec![2.0, 4.0]),
            per_point_sum: None,
        },
        "optimal two-distance set in R^3",
    ));
    out.push(e(
        "prism3",
        vec![],
        Expected {
            cardinality: 6,
            class_count: 2,
            local_width: 2,
            spherical: true,
            antipodal: false,
            design_strength: None,
            squared_classes: Some(vec![1.0, 2.0]),
            per_point_sum: None,
        },
        "optimal two-distance set in R^3",
    ));
    out.push(e(
        "icosahedron",
        vec![],
        Expected {
            cardinality: 12,
            class_count: 3,
            local_width: 3,
            spherical: true,
            antipodal: true,
            design_strength: Some(5),
            squared_classes: None,
            per_point_sum: None,
        },
        "optimal three-distance set in R^3, tight spherical 5-design",
    ));
    out.push(e(
        "petersen10",
        vec![],
        Expected {
            cardinality: 10,
            class_count: 2,
            local_width: 2,
            spherical: true,
            antipodal: false,
            design_strength: None,
            squared_classes: None,
            per_point_sum: None,
        },
        "optimal two-distance set in R^4 (Petersen graph)",
    ));
    out.push(e(
        "clebsch16",
        vec![],
        Expected {
            cardinality: 16,
            class_count: 2,
            local_width: 2,
            spherical: true,
            antipodal: false,
            design_strength: None,
            squared_classes: Some(vec![2.0, 4.0]),
            per_point_sum: None,
        },
        "optimal two-distance set in R^5 (Clebsch graph)",
    ));
    out.push(e(
        "schlafli27",
        vec![],
        Expected {
            cardinality: 27,
            class_count: 2,
            local_width: 2,
            spherical: true,
            antipodal: false,
            design_strength: None,
            squared_classes: None,
            per_point_sum: None,
        },
        "optimal two-distance set in R^6 (Schlafli graph)",
    ));
    out.push(e(
        "d7_29",
        vec![],
        Expected {
            cardinality: 29,
            class_count: 2,
            local_width: 2,
            spherical: false,
            antipodal: false,
            design_strength: None,
            squared_classes: Some(vec![2.0, 4.0]),
            per_point_sum: None,
        },
        "optimal two-distance set in R^7",
    ));
    out.push(e(
        "d8_45",
        vec![],
        Expected {
            cardinality: 45,
            class_count: 2,
            local_width: 2,
            spherical: false,
            antipodal: false,
            design_strength: None,
            squared_classes: Some(vec![2.0, 4.0]),
            per_point_sum: None,
        },
        "45-point two-distance set in R^8",
    ));
    for d in 2..=12usize {
        out.push(e(
            "midpoint_simplex",
            vec![("d", d as f64)],
            Expected {
                cardinality: d * (d + 1) / 2,
                // the d = 2 midpoints form a smaller equilateral triangle
                class_count: if d == 2 { 1 } else { 2 },
                local_width: if d == 2 { 1 } else { 2 },
                spherical: true,
                // the d = 3 midpoints form a regular octahedron
                antipodal: d == 3,
                design_strength: None,
                squared_classes: None,
                per_point_sum: None,
            },
            "midpoints of the edges of a regular simplex",
        ));
    }
    for k in 3..=8usize {
        out.push(e(
            "chain_2k",
            vec![("k", k as f64)],
            Expected {
                cardinality: 2 * (k - 1),
                class_count: k,
                local_width: 2,
                spherical: true,
                antipodal: false,
                design_strength: None,
                squared_classes: None,
                per_point_sum: None,
            },
            "locally two-distance, globally k-distance chain",
        ));
    }
    for d in 2..=10usize {
        out.push(e(
            "cross_polytope",
            vec![("d", d as f64)],
            Expected {
                cardinality: 2 * d,
                class_count: 2,
                local_width: 2,
                spherical: true,
                antipodal: true,
                design_strength: Some(3),
                squared_classes: Some(vec![2.0, 4.0]),
                per_point_sum: None,
            },
            "tight spherical 3-design",
        ));
    }
    out.push(e(
        "figure1",
        vec![],
        Expected {
            cardinality: 8,
            class_count: 4,
            local_width: 3,
            spherical: false,
            antipodal: false,
            design_strength: None,
            squared_classes: Some(vec![1.0, 2.0, 2.0 + 3f64.sqrt(), (1.0 + 3f64.sqrt()).powi(2)]),
            per_point_sum: Some(24),
        },
        "optimal 8-point planar locally three-distance set",
    ));
    out
}

/// Outcome of running the verification pipeline on one catalog entry.
#[derive(Clone, Debug)]
pub struct VerificationRecord {
    pub name: String,
    pub params: Vec<(&'static str, f64)>,
    pub passed: bool,
    pub failures: Vec<String>,
}

pub fn verify_entry(entry: &CatalogEntry) -> Result<VerificationRecord, Error> {
    let params: Vec<(&str, f64)> = entry.params.clone();
    let x = construct(entry.name, &params)?;
    let mut failures = Vec::new();
    let exp = &entry.expected;
    if x.len() != exp.cardinality {
        failures.push(format!("cardinality {} != {}", x.len(), exp.cardinality));
    }
    let profile = distance_profile(&x)?;
    if profile.class_count() != exp.class_count {
        failures.push(format!(
            "class count {} != {}",
            profile.class_count(),
            exp.class_count
        ));
    }
    if profile.local_width() != exp.local_width {
        failures.push(format!(
            "local width {} != {}",
            profile.local_width(),
            exp.local_width
        ));
    }
    if let Some(sq) = &exp.squared_classes {
        if sq.len() == profile.classes.len() {
            for (a, b) in profile.classes.iter().zip(sq) {
                if (a - b).abs() > 1e-8 {
                    failures.push(format!("squared class {a} != expected {b}"));
                }
            }
        } else {
            failures.push("squared class count mismatch".into());
        }
    }
    if let Some(s) = exp.per_point_sum {
        let total: usize = profile.per_point.iter().map(|p| p.len()).sum();
        if total != s {
            failures.push(format!("per-point class sum {total} != {s}"));
        }
    }
    let normalized = center_and_normalize(&x);
    match (&normalized, exp.spherical) {
        (Ok(_), false) => failures.push("unexpectedly concyclic".into()),
        (Err(_), true) => failures.push("expected a concyclic set".into()),
        _ => {}
    }
    if let Ok((unit, _)) = &normalized {
        let anti = is_antipodal(unit)?.is_some();
        if anti != exp.antipodal {
            failures.push(format!("antipodality {anti} != expected {}", exp.antipodal));
        }
        if let Some(t) = exp.design_strength {
            let w = WeightedPointSet::uniform(unit.clone())?;
            let v = is_weighted_design(&w, t + 1)?;
            if v.report.verdict != t {
                failures.push(format!(
                    "design strength {} != claimed {t}",
                    v.report.verdict
                ));
            }
        }
    }
    Ok(VerificationRecord {
        name: entry.name.to_string(),
        params: entry.params.clone(),
        passed: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::inner_spectrum;

    #[test]
    fn all_entries_verify() {
        for entry in entries() {
            let rec = verify_entry(&entry).unwrap_or_else(|e| {
                panic!("{} {:?}: pipeline error {e}", entry.name, entry.params)
            });
            assert!(
                rec.passed,
                "{} {:?}: {:?}",
                entry.name, entry.params, rec.failures
            );
        }
    }

    #[test]
    fn clebsch_classes() {
        let x = clebsch16();
        let p = distance_profile(&x).unwrap();
        assert_eq!(x.len(), 16);
        assert_eq!(p.class_count(), 2);
        assert!((p.classes[0] - 2.0).abs() < 1e-12);
        assert!((p.classes[1] - 4.0).abs() < 1e-12);
    }

    #[test]
    fn d8_counts() {
        let x = d8_45();
        assert_eq!(x.len(), 45); // C(10,2)
        let p = distance_profile(&x).unwrap();
        assert_eq!(p.class_count(), 2);
    }

    #[test]
    fn midpoint_simplex_two_classes() {
        for d in 3..=12usize {
            let x = midpoint_simplex(d).unwrap();
            assert_eq!(x.len(), d * (d + 1) / 2);
            let p = distance_profile(&x).unwrap();
            assert_eq!(p.class_count(), 2, "d={d}");
        }
    }

    #[test]
    fn midpoint_simplex7_inner_pair_sum_nonnegative() {
        let x = midpoint_simplex(7).unwrap();
        let (unit, _) = center_and_normalize(&x).unwrap();
        let s = inner_spectrum(&unit).unwrap();
        assert_eq!(s.classes.len(), 2);
        assert!(s.classes[0] + s.classes[1] >= -1e-12);
    }

    #[test]
    fn graph_embeddings_match_constructors() {
        for (graph, explicit) in [
            ("petersen", midpoint_simplex(4).unwrap()),
            ("clebsch", clebsch16()),
            ("schlafli", schlafli27().unwrap()),
        ] {
            let g = match graph {
                "petersen" => petersen_graph(),
                "clebsch" => clebsch_graph(),
                _ => schlafli_graph(),
            };
            let (a, b) = embed_pair(graph).unwrap();
            let embedded = match graph_embed(&g, a, b).unwrap() {
                GraphEmbedOutcome::Embedded(x) => x,
                GraphEmbedOutcome::Infeasible { min_eigenvalue } => {
                    panic!("{graph}: infeasible ({min_eigenvalue})")
                }
            };
            let (unit_expl, _) = center_and_normalize(&explicit).unwrap();
            let flat = project_to_span(&unit_expl).unwrap();
            assert_eq!(embedded.dim(), flat.dim(), "{graph}");
            let pe = distance_profile(&embedded).unwrap();
            let pf = distance_profile(&flat).unwrap();
            assert_eq!(pe.multiplicities, pf.multiplicities, "{graph}");
        }
    }

    #[test]
    fn infeasible_embedding_reports_negative_eigenvalue() {
        match graph_embed(&petersen_graph(), 0.9, -0.9).unwrap() {
            GraphEmbedOutcome::Infeasible { min_eigenvalue } => {
                assert!(min_eigenvalue < -0.1);
            }
            _ => panic!("should be infeasible"),
        }
    }

    #[test]
    fn simplex_from_complete_graph() {
        let g = GraphSpec::from_edges(
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        match graph_embed(&g, -1.0 / 3.0, 0.0).unwrap() {
            GraphEmbedOutcome::Embedded(x) => {
                assert_eq!(x.dim(), 3);
                assert_eq!(x.len(), 4);
                let s = inner_spectrum(&x).unwrap();
                assert_eq!(s.classes.len(), 1);
            }
            _ => panic!("simplex Gram is PSD"),
        }
    }

    #[test]
    fn chain_is_k_distance() {
        for k in 3..=8usize {
            let x = chain_2k(k).unwrap();
            assert_eq!(x.len(), 2 * (k - 1));
            assert_eq!(x.dim(), 2 * k - 3);
            let p = distance_profile(&x).unwrap();
            assert_eq!(p.class_count(), k, "k={k}");
            assert_eq!(p.local_width(), 2, "k={k}");
        }
    }

    #[test]
    fn simplex_plus_ray_proper_locally_two() {
        for d in 2..=5usize {
            let x = simplex_plus_ray(d, -0.7).unwrap();
            let p = distance_profile(&x).unwrap();
            assert!(p.local_width() <= 2, "d={d}");
            assert!(p.class_count() > 2, "d={d} should be proper");
        }
    }

    #[test]
    fn icosahedron_subset_enumeration() {
        let subs = icosahedron_two_distance_subsets();
        // the classification says four of the six optimal 6-point sets are
        // icosahedron subsets; the enumeration up to profile signature
        // agrees
        assert_eq!(subs.len(), 4);
        for s in &subs {
            let p = distance_profile(s).unwrap();
            assert_eq!(p.class_count(), 2);
            assert_eq!(s.len(), 6);
        }
    }

    #[test]
    fn exceptional_ray_parameters() {
        // d = 3: classes collide at s = 0, s = 1 +- sqrt(8/3), s = -5/3,
        // and the point hits a vertex at s = 1
        let roots = simplex_ray_exceptional_s(3, -4.0, 4.0, 1e-3);
        let e = (8.0f64 / 3.0).sqrt();
        let expected = [-5.0 / 3.0, 1.0 - e, 0.0, 1.0, 1.0 + e];
        assert_eq!(roots.len(), expected.len(), "{roots:?}");
        for (r, x) in roots.iter().zip(expected) {
            assert!((r - x).abs() < 1e-6, "{r} vs {x}");
        }
        // generic parameters stay three-class
        for s in [-0.7, 0.5, 2.0] {
            let p = distance_profile(&simplex_plus_ray(3, s).unwrap()).unwrap();
            assert_eq!(p.class_count(), 3, "s={s}");
        }
        // at an exceptional parameter the profile really does collapse
        let p = distance_profile(&simplex_plus_ray(3, 1.0 + e).unwrap()).unwrap();
        assert_eq!(p.class_count(), 2);
    }

    #[test]
    fn tables_shipped_values() {
        let t = known_tables();
        assert_eq!(t.ds2[&6], 27);
        assert_eq!(t.ds2_planar[&5], 12);
        assert_eq!(t.ds_star2[&22], TableValue::Exact(275));
        assert_eq!(t.ds_star2[&23], TableValue::Interval(276, 277));
        assert_eq!(t.lds_star2[&23], 277);
        assert_eq!(t.lds2[&3], 7);
        assert_eq!(t.misc["DS_3(3)"], 12);
    }

    #[test]
    fn unknown_name_errors() {
        assert!(matches!(
            construct("dodecahedron", &[]),
            Err(Error::UnknownName(_))
        ));
        assert!(matches!(
            construct("midpoint_simplex", &[]),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn exact_gram_snapping_rejects_far_values() {
        let x = icosahedron();
        let bad = [QExt::ratio(1, 2)];
        assert!(exact_gram_from_classes(&x, &bad).is_err());
        assert!(icosahedron_gram().is_ok());
    }
}
