//! Command-line front end: parses point-set and weight files, dispatches to
//! the library modules, and emits one structured report per invocation.
//!
//! Exit codes: 0 on success, 1 on input error, 2 on verification mismatch.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use distkit::bounds::{self, LpOutcome, TableValue};
use distkit::catalog;
use distkit::designs::{self, WeightedPointSet};
use distkit::error::Error;
use distkit::exact::QExt;
use distkit::gegenbauer;
use distkit::geometry::{
    self, center_and_normalize, distance_profile, is_antipodal, DEFAULT_TOL,
};
use distkit::io::{self, PointInput};
use distkit::poly::Poly;
use distkit::report::{floats, map, Report, Value};
use distkit::search;

#[derive(Parser)]
#[command(
    name = "distkit",
    version,
    about = "distance-set classification, bound certificates, and design verification"
)]
struct Cli {
    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Force exact quadratic-field arithmetic; fails if inputs are not
    /// exactly representable
    #[arg(long, global = true)]
    exact: bool,
    /// Class-merge tolerance override (DISTKIT_TOL also applies)
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a point set: distance classes, local width, sphericity
    Analyze { file: PathBuf },
    /// Bound certificates from inner-product classes
    Bounds {
        #[arg(long)]
        dim: u32,
        /// Distance-class count k (for Fisher numbers and the antipodal bound)
        #[arg(long)]
        k: Option<u32>,
        /// Comma-separated inner-product classes, exact strings accepted
        #[arg(long)]
        inner: String,
        #[arg(long)]
        antipodal: bool,
    },
    /// Verify a weighted design of asserted strength
    DesignCheck {
        file: PathBuf,
        #[arg(long)]
        strength: u32,
        /// Weights file (uniform weights if omitted)
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Construct canonical design weights w(x) = f_k^(x)
    Weights {
        file: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        antipodal: bool,
    },
    /// Extract a tight 4-design section of a tight 5-design
    Section {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        base_index: usize,
        /// One of the two non-antipodal distance classes (0 = nearer)
        #[arg(long, default_value_t = 0)]
        class: usize,
    },
    /// Catalog of named configurations
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Shipped tables of known extremal cardinalities plus the recursion cap
    Tables,
    /// Saturated-subset decomposition check for a locally two-distance set
    Decompose { file: PathBuf },
    /// Grid searches supporting small nonexistence claims
    Search {
        /// Claim id: line4 | midpoint5
        claim: String,
        #[arg(long)]
        step: Option<f64>,
        #[arg(long)]
        extent: Option<f64>,
    },
    /// Gegenbauer polynomial evaluation and expansion
    Gegenbauer {
        #[command(subcommand)]
        action: GegCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List all catalog entries with expected profiles
    List,
    /// Emit a named configuration in the point-set file format
    Emit {
        name: String,
        /// Constructor parameters as key=value (e.g. --param d=4)
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Run the verification pipeline on one or all entries
    Verify { name: Option<String> },
}

#[derive(Subcommand)]
enum GegCmd {
    /// Evaluate G_l^(d) at an exact point
    Eval {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        l: u32,
        /// Evaluation point, exact string (e.g. "1/2" or "1/5*sqrt(5)")
        #[arg(long)]
        t: String,
    },
    /// Expand a polynomial (ascending exact coefficients) in the G_i basis
    Expand {
        #[arg(long)]
        dim: u32,
        /// Comma-separated ascending coefficients, exact strings
        #[arg(long)]
        coeffs: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = cli
        .tol
        .or_else(|| {
            std::env::var("DISTKIT_TOL")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_TOL);
    let mode = if cli.exact {
        "exact".to_string()
    } else {
        format!("float tol={tol:?}")
    };
    match run(&cli, tol, &mode) {
        Ok((report, code)) => {
            let text = report.render();
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("distkit: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("distkit: {e}");
            let code = match e {
                Error::VerificationMismatch(_) | Error::StrengthMismatch(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli, tol: f64, mode: &str) -> Result<(Report, u8), Error> {
    match &cli.cmd {
        Cmd::Analyze { file } => cmd_analyze(file, cli.exact, tol, mode),
        Cmd::Bounds {
            dim,
            k,
            inner,
            antipodal,
        } => cmd_bounds(*dim, *k, inner, *antipodal, mode),
        Cmd::DesignCheck {
            file,
            strength,
            weights,
        } => cmd_design_check(file, *strength, weights.as_deref(), cli.exact, tol, mode),
        Cmd::Weights { file, k, antipodal } => cmd_weights(file, *k, *antipodal, tol, mode),
        Cmd::Section {
            file,
            base_index,
            class,
        } => cmd_section(file, *base_index, *class, tol, mode),
        Cmd::Catalog { action } => cmd_catalog(action, mode),
        Cmd::Tables => cmd_tables(mode),
        Cmd::Decompose { file } => cmd_decompose(file, tol, mode),
        Cmd::Search {
            claim,
            step,
            extent,
        } => cmd_search(claim, *step, *extent, mode),
        Cmd::Gegenbauer { action } => cmd_gegenbauer(action),
    }
}

fn read_points(file: &std::path::Path, tol: f64) -> Result<(PointInput, Vec<u8>), Error> {
    let bytes = std::fs::read(file)?;
    let text = String::from_utf8_lossy(&bytes);
    let input = io::parse_point_file(&text, tol)?;
    Ok((input, bytes))
}

fn parse_inner(s: &str) -> Result<Vec<QExt>, Error> {
    s.split(',')
        .map(|e| QExt::from_str(e.trim()))
        .collect::<Result<Vec<_>, _>>()
}

fn qext_list(vals: &[QExt]) -> Value {
    Value::List(vals.iter().map(Value::exact).collect())
}

fn certificate_value(c: &bounds::BoundCertificate) -> Value {
    let mut fields = vec![
        ("kind", Value::str(c.kind.to_string())),
        ("value", Value::Int(c.value as i128)),
        ("dim", Value::Int(c.dim as i128)),
        ("inner", qext_list(&c.inner)),
    ];
    if let Some(e) = &c.exact {
        fields.insert(2, ("exact-value", Value::exact(e)));
    }
    fields.push((
        "evidence",
        Value::List(
            c.evidence
                .iter()
                .map(|e| {
                    map(vec![
                        ("index", Value::Int(e.index as i128)),
                        ("coeff", Value::exact(&e.coeff)),
                        ("sign", Value::Int(e.sign as i128)),
                        ("harm-dim", Value::Int(e.harm_dim as i128)),
                    ])
                })
                .collect(),
        ),
    ));
    if !c.warnings.is_empty() {
        fields.push((
            "warnings",
            Value::List(c.warnings.iter().map(Value::str).collect()),
        ));
    }
    map(fields)
}

fn moment_report_value(r: &designs::MomentReport) -> Value {
    map(vec![
        ("strength-checked", Value::Int(r.strength_checked as i128)),
        ("moments", floats(&r.moments)),
        ("thresholds", floats(&r.thresholds)),
        ("verdict", Value::Int(r.verdict as i128)),
    ])
}

fn cmd_analyze(
    file: &std::path::Path,
    exact: bool,
    tol: f64,
    mode: &str,
) -> Result<(Report, u8), Error> {
    let (input, bytes) = read_points(file, tol)?;
    let mut report =
        Report::new(format!("analyze {}", file.display()), mode).with_digest_of(&bytes);
    match input {
        PointInput::Gram { gram, dim } => {
            // exact classification straight off the Gram entries
            let n = gram.len();
            let mut classes: Vec<QExt> = Vec::new();
            let mut per_point = vec![0usize; n];
            for (i, row) in gram.iter().enumerate() {
                let mut seen: Vec<QExt> = Vec::new();
                for (j, e) in row.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    if !classes.contains(e) {
                        classes.push(e.clone());
                    }
                    if !seen.contains(e) {
                        seen.push(e.clone());
                    }
                }
                per_point[i] = seen.len();
            }
            classes.sort_by(|a, b| a.to_f64().partial_cmp(&b.to_f64()).unwrap());
            let squared: Vec<QExt> = classes
                .iter()
                .map(|a| QExt::from_int(2) - QExt::from_int(2) * a.clone())
                .collect();
            let local_width = per_point.iter().copied().max().unwrap_or(0);
            report.results = map(vec![
                ("cardinality", Value::Int(n as i128)),
                ("dim", Value::Int(dim as i128)),
                ("class-count", Value::Int(classes.len() as i128)),
                ("inner-classes", qext_list(&classes)),
                ("squared-chord-classes", qext_list(&squared)),
                ("local-width", Value::Int(local_width as i128)),
                (
                    "per-point-class-counts",
                    Value::List(per_point.iter().map(|&c| Value::Int(c as i128)).collect()),
                ),
                ("spherical", Value::Bool(true)),
            ]);
            Ok((report, 0))
        }
        PointInput::Coords(x) => {
            if exact {
                return Err(Error::Parse(
                    "exact mode needs a 'gram' file with exact entries; decimal \
                     coordinates are not exactly representable"
                        .into(),
                ));
            }
            let profile = distance_profile(&x)?;
            let proper = profile.class_count() > profile.local_width();
            let mut fields = vec![
                ("cardinality", Value::Int(x.len() as i128)),
                ("dim", Value::Int(x.dim() as i128)),
                ("class-count", Value::Int(profile.class_count() as i128)),
                ("squared-classes", floats(&profile.classes)),
                ("distance-classes", floats(&profile.distance_classes())),
                (
                    "multiplicities",
                    Value::List(
                        profile
                            .multiplicities
                            .iter()
                            .map(|&m| Value::Int(m as i128))
                            .collect(),
                    ),
                ),
                ("local-width", Value::Int(profile.local_width() as i128)),
                (
                    "per-point-class-counts",
                    Value::List(
                        profile
                            .per_point
                            .iter()
                            .map(|s| Value::Int(s.len() as i128))
                            .collect(),
                    ),
                ),
                ("proper", Value::Bool(proper)),
            ];
            match center_and_normalize(&x) {
                Ok((unit, sim)) => {
                    fields.push(("spherical", Value::Bool(true)));
                    fields.push(("circumradius", Value::Float(sim.radius)));
                    let spectrum = geometry::inner_spectrum(&unit)?;
                    fields.push(("inner-classes", floats(&spectrum.classes)));
                    fields.push((
                        "antipodal",
                        Value::Bool(is_antipodal(&unit)?.is_some()),
                    ));
                }
                Err(_) => fields.push(("spherical", Value::Bool(false))),
            }
            report.results = map(fields);
            Ok((report, 0))
        }
    }
}

fn cmd_bounds(
    dim: u32,
    k: Option<u32>,
    inner: &str,
    antipodal: bool,
    mode: &str,
) -> Result<(Report, u8), Error> {
    let inner = parse_inner(inner)?;
    let mut report = Report::new(
        format!("bounds --dim {dim} --inner <{} classes>", inner.len()),
        mode,
    );
    let mut fields: Vec<(&str, Value)> = Vec::new();
    if let Some(k) = k {
        fields.push((
            "fisher",
            Value::Int(bounds::fisher(dim, k) as i128),
        ));
        fields.push((
            "fisher-antipodal",
            Value::Int(bounds::fisher_antipodal(dim, k) as i128),
        ));
    }
    if antipodal {
        let k = k.ok_or_else(|| {
            Error::OutOfRange("--antipodal needs --k (the distance-class count)".into())
        })?;
        let cert = bounds::positive_coeff_bound_antipodal(&inner, dim, k)?;
        fields.push(("positive-coeff-antipodal", certificate_value(&cert)));
    } else {
        match bounds::lp_bound(&inner, dim)? {
            LpOutcome::Applicable(cert) => fields.push(("lp", certificate_value(&cert))),
            LpOutcome::NotApplicable { offending } => fields.push((
                "lp",
                map(vec![
                    ("applicable", Value::Bool(false)),
                    (
                        "offending-signs",
                        Value::List(
                            offending
                                .iter()
                                .map(|e| {
                                    map(vec![
                                        ("index", Value::Int(e.index as i128)),
                                        ("coeff", Value::exact(&e.coeff)),
                                        ("sign", Value::Int(e.sign as i128)),
                                    ])
                                })
                                .collect(),
                        ),
                    ),
                ]),
            )),
        }
        let cert = bounds::positive_coeff_bound(&inner, dim)?;
        fields.push(("positive-coeff", certificate_value(&cert)));
    }
    report.results = map(fields);
    Ok((report, 0))
}

fn cmd_design_check(
    file: &std::path::Path,
    strength: u32,
    weights_file: Option<&std::path::Path>,
    exact: bool,
    tol: f64,
    mode: &str,
) -> Result<(Report, u8), Error> {
    let (input, bytes) = read_points(file, tol)?;
    let mut report = Report::new(
        format!("design-check {} --strength {strength}", file.display()),
        mode,
    )
    .with_digest_of(&bytes);
    let weights = match weights_file {
        Some(p) => Some(io::parse_weights(&String::from_utf8_lossy(&std::fs::read(
            p,
        )?))?),
        None => None,
    };
    match input {
        PointInput::Gram { gram, dim } => {
            let n = gram.len();
            let wexact: Vec<QExt> = match &weights {
                Some((_, Some(e))) => e.clone(),
                Some((_, None)) => {
                    return Err(Error::Parse(
                        "gram input needs exactly representable weights".into(),
                    ))
                }
                None => vec![QExt::ratio(1, n as i64); n],
            };
            let moments = designs::moment_sums_exact(&gram, &wexact, dim as u32, strength)?;
            let all_zero = moments.iter().all(|m| m.is_zero());
            let tight = all_zero && designs::is_tight(n, dim as u32, strength);
            report.results = map(vec![
                ("cardinality", Value::Int(n as i128)),
                ("strength-asserted", Value::Int(strength as i128)),
                (
                    "moments",
                    Value::List(moments.iter().map(Value::exact).collect()),
                ),
                ("is-design", Value::Bool(all_zero)),
                ("tight", Value::Bool(tight)),
            ]);
            Ok((report, if all_zero { 0 } else { 2 }))
        }
        PointInput::Coords(x) => {
            if exact {
                return Err(Error::Parse(
                    "exact mode needs a 'gram' file with exact entries".into(),
                ));
            }
            let (unit, _) = center_and_normalize(&x)?;
            let w = match weights {
                Some((f, _)) => WeightedPointSet::new(unit, f)?,
                None => WeightedPointSet::uniform(unit)?,
            };
            let verdict = designs::is_weighted_design(&w, strength)?;
            report.results = map(vec![
                ("cardinality", Value::Int(w.base().len() as i128)),
                ("strength-asserted", Value::Int(strength as i128)),
                ("is-design", Value::Bool(verdict.is_design)),
                ("tight", Value::Bool(verdict.tight)),
                ("moment-report", moment_report_value(&verdict.report)),
            ]);
            Ok((report, if verdict.is_design { 0 } else { 2 }))
        }
    }
}

fn cmd_weights(
    file: &std::path::Path,
    k: u32,
    antipodal: bool,
    tol: f64,
    mode: &str,
) -> Result<(Report, u8), Error> {
    let (input, bytes) = read_points(file, tol)?;
    let mut report = Report::new(
        format!("weights {} --k {k}", file.display()),
        mode,
    )
    .with_digest_of(&bytes);
    let PointInput::Coords(x) = input else {
        return Err(Error::Parse(
            "weights construction takes coordinate input".into(),
        ));
    };
    let (unit, _) = center_and_normalize(&x)?;
    let dw = if antipodal {
        designs::design_weights_antipodal(&unit, k)?
    } else {
        designs::design_weights(&unit, k)?
    };
    let mut fields = vec![
        ("cardinality", Value::Int(unit.len() as i128)),
        ("weights", floats(&dw.weights)),
        ("weight-sum", Value::Float(dw.weight_sum)),
        ("hypotheses-met", Value::Bool(dw.hypotheses_met)),
        (
            "design-strength-claimed",
            Value::Int(dw.design_strength_claimed as i128),
        ),
        ("tight", Value::Bool(dw.tight)),
    ];
    if let Some(r) = &dw.report {
        fields.push(("moment-report", moment_report_value(r)));
    }
    report.results = map(fields);
    Ok((report, 0))
}

fn cmd_section(
    file: &std::path::Path,
    base_index: usize,
    class: usize,
    tol: f64,
    mode: &str,
) -> Result<(Report, u8), Error> {
    let (input, bytes) = read_points(file, tol)?;
    let mut report = Report::new(
        format!(
            "section {} --base-index {base_index} --class {class}",
            file.display()
        ),
        mode,
    )
    .with_digest_of(&bytes);
    let PointInput::Coords(x) = input else {
        return Err(Error::Parse("section takes coordinate input".into()));
    };
    let (unit, _) = center_and_normalize(&x)?;
    let w = WeightedPointSet::uniform(unit)?;
    let section = designs::tight_section(&w, base_index, class)?;
    let profile = distance_profile(&section)?;
    report.results = map(vec![
        ("section-cardinality", Value::Int(section.len() as i128)),
        ("section-dim", Value::Int(section.dim() as i128)),
        ("class-count", Value::Int(profile.class_count() as i128)),
        ("tight-4-design", Value::Bool(true)),
        ("points", Value::Str(format!("\n{}", io::emit_point_file(&section)))),
    ]);
    Ok((report, 0))
}

fn cmd_catalog(action: &CatalogCmd, mode: &str) -> Result<(Report, u8), Error> {
    match action {
        CatalogCmd::List => {
            let mut report = Report::new("catalog list", mode);
            let entries = catalog::entries();
            report.results = Value::List(
                entries
                    .iter()
                    .map(|e| {
                        map(vec![
                            ("name", Value::str(e.name)),
                            (
                                "params",
                                Value::List(
                                    e.params
                                        .iter()
                                        .map(|(k, v)| Value::Str(format!("{k}={v}")))
                                        .collect(),
                                ),
                            ),
                            (
                                "cardinality",
                                Value::Int(e.expected.cardinality as i128),
                            ),
                            (
                                "class-count",
                                Value::Int(e.expected.class_count as i128),
                            ),
                            ("citation", Value::str(e.citation)),
                        ])
                    })
                    .collect(),
            );
            Ok((report, 0))
        }
        CatalogCmd::Emit { name, params } => {
            let parsed: Vec<(String, f64)> = params
                .iter()
                .map(|p| {
                    let (k, v) = p
                        .split_once('=')
                        .ok_or_else(|| Error::Parse(format!("bad --param '{p}'")))?;
                    let v: f64 = v
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad --param value '{p}'")))?;
                    Ok((k.to_string(), v))
                })
                .collect::<Result<_, Error>>()?;
            let refs: Vec<(&str, f64)> =
                parsed.iter().map(|(k, v)| (k.as_str(), *v)).collect();
            let x = catalog::construct(name, &refs)?;
            let mut report = Report::new(format!("catalog emit {name}"), mode);
            report.results = map(vec![(
                "points",
                Value::Str(format!("\n{}", io::emit_point_file(&x))),
            )]);
            Ok((report, 0))
        }
        CatalogCmd::Verify { name } => {
            let entries = catalog::entries();
            let selected: Vec<_> = match name {
                Some(n) => {
                    let found: Vec<_> =
                        entries.into_iter().filter(|e| e.name == *n).collect();
                    if found.is_empty() {
                        return Err(Error::UnknownName(format!("catalog entry '{n}'")));
                    }
                    found
                }
                None => entries,
            };
            let mut any_failed = false;
            let mut records = Vec::new();
            for entry in &selected {
                let rec = catalog::verify_entry(entry)?;
                if !rec.passed {
                    any_failed = true;
                }
                records.push(map(vec![
                    ("name", Value::str(&rec.name)),
                    (
                        "params",
                        Value::List(
                            rec.params
                                .iter()
                                .map(|(k, v)| Value::Str(format!("{k}={v}")))
                                .collect(),
                        ),
                    ),
                    ("passed", Value::Bool(rec.passed)),
                    (
                        "failures",
                        Value::List(rec.failures.iter().map(Value::str).collect()),
                    ),
                ]));
            }
            let mut report = Report::new("catalog verify", mode);
            report.results = Value::List(records);
            Ok((report, if any_failed { 2 } else { 0 }))
        }
    }
}

fn table_map_u64(t: &std::collections::BTreeMap<u32, u64>) -> Value {
    Value::Map(
        t.iter()
            .map(|(k, v)| (k.to_string(), Value::Int(*v as i128)))
            .collect(),
    )
}

fn cmd_tables(mode: &str) -> Result<(Report, u8), Error> {
    let t = catalog::known_tables();
    let mut report = Report::new("tables", mode);
    let star = Value::Map(
        t.ds_star2
            .iter()
            .map(|(k, v)| {
                let val = match v {
                    TableValue::Exact(x) => Value::Int(*x as i128),
                    TableValue::Interval(a, b) => Value::Str(format!("{{{a}, {b}}}")),
                };
                (k.to_string(), val)
            })
            .collect(),
    );
    let mut recursion = Vec::new();
    for d in 2..=40u32 {
        let r = bounds::lds_recursion(d, &t)?;
        recursion.push(map(vec![
            ("dim", Value::Int(d as i128)),
            ("f", Value::Int(r.f_d as i128)),
            ("cap", Value::Int(r.cap as i128)),
            ("best-split", Value::Int(r.best_split as i128)),
        ]));
    }
    report.results = map(vec![
        ("ds2", table_map_u64(&t.ds2)),
        ("ds2-planar", table_map_u64(&t.ds2_planar)),
        ("ds-star2", star),
        ("lds2", table_map_u64(&t.lds2)),
        ("lds-star2", table_map_u64(&t.lds_star2)),
        (
            "misc",
            Value::Map(
                t.misc
                    .iter()
                    .map(|(k, v)| (k.to_string(), Value::Int(*v as i128)))
                    .collect(),
            ),
        ),
        ("lds-recursion", Value::List(recursion)),
    ]);
    Ok((report, 0))
}

fn cmd_decompose(file: &std::path::Path, tol: f64, mode: &str) -> Result<(Report, u8), Error> {
    let (input, bytes) = read_points(file, tol)?;
    let mut report =
        Report::new(format!("decompose {}", file.display()), mode).with_digest_of(&bytes);
    let PointInput::Coords(x) = input else {
        return Err(Error::Parse("decompose takes coordinate input".into()));
    };
    let t = catalog::known_tables();
    let check = search::verify_decomposition(&x, &t)?;
    let mut fields = vec![("vacuous", Value::Bool(check.vacuous))];
    if check.vacuous {
        fields.push(("note", Value::str("vacuous (not proper)")));
    } else {
        fields.extend([
            ("subset-size", Value::Int(check.subset_size as i128)),
            ("subset-dim", Value::Int(check.subset_dim as i128)),
            ("remainder-size", Value::Int(check.remainder_size as i128)),
            ("remainder-dim", Value::Int(check.remainder_dim as i128)),
            ("within-cap", Value::Bool(check.within_cap)),
        ]);
        if let Some(c) = check.total_cap {
            fields.push(("total-cap", Value::Int(c as i128)));
        }
    }
    report.results = map(fields);
    Ok((report, if check.within_cap { 0 } else { 2 }))
}

fn cmd_search(
    claim: &str,
    step: Option<f64>,
    extent: Option<f64>,
    mode: &str,
) -> Result<(Report, u8), Error> {
    let r = match claim {
        "line4" => search::refute_line4(step.unwrap_or(1e-3), extent.unwrap_or(5.0)),
        "midpoint5" => search::refute_midpoint5(step.unwrap_or(5e-3), extent.unwrap_or(2.0)),
        _ => {
            return Err(Error::UnknownName(format!(
                "claim '{claim}' (expected line4 or midpoint5)"
            )))
        }
    };
    let mut report = Report::new(format!("search {claim}"), mode);
    report.results = map(vec![
        ("claim", Value::str(&r.name)),
        ("grid-points", Value::Int(r.grid_points as i128)),
        ("step", Value::Float(r.step)),
        ("extent", Value::Float(r.extent)),
        ("min-violation", Value::Float(r.min_violation)),
        ("min-max-classes", Value::Int(r.min_max_classes as i128)),
        ("argmin", floats(&r.argmin)),
        ("verdict", Value::str(r.verdict.to_string())),
        (
            "notes",
            Value::List(r.notes.iter().map(Value::str).collect()),
        ),
    ]);
    let ok = r.verdict == search::SearchVerdict::SupportsNonexistence;
    Ok((report, if ok { 0 } else { 2 }))
}

fn cmd_gegenbauer(action: &GegCmd) -> Result<(Report, u8), Error> {
    match action {
        GegCmd::Eval { dim, l, t } => {
            let t = QExt::from_str(t)?;
            let v = gegenbauer::gegenbauer_eval::<QExt>(*dim, *l, &t)?;
            let mut report = Report::new(format!("gegenbauer eval --dim {dim} --l {l}"), "exact");
            report.results = map(vec![
                ("t", Value::exact(&t)),
                ("value", Value::exact(&v)),
            ]);
            Ok((report, 0))
        }
        GegCmd::Expand { dim, coeffs } => {
            let coeffs = parse_inner(coeffs)?;
            let poly = Poly::new(coeffs);
            let exp = gegenbauer::expand(&poly, *dim)?;
            let mut report = Report::new(format!("gegenbauer expand --dim {dim}"), "exact");
            report.results = map(vec![
                ("dim", Value::Int(*dim as i128)),
                ("gegenbauer-coeffs", qext_list(&exp.coeffs)),
            ]);
            Ok((report, 0))
        }
    }
}
