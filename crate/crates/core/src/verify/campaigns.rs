//! Exhaustive verification campaigns over all tree classes of one order.
//!
//! Every campaign walks the full universe from [`enumerate_trees_with_codes`],
//! evaluates its statement on each admissible tree (and move), and returns a
//! [`CampaignReport`]. Failures become failed records, never panics: the
//! report is the evidence either way. Radii are computed by power iteration
//! and cross-checked against the Jacobi oracle on every matrix built.

use rayon::prelude::*;

use crate::canon::{canonical_code, CanonicalCode};
use crate::enumerate::enumerate_trees_with_codes;
use crate::jacobi::eig_oracle;
use crate::spectral::{
    spectral_radius, DistMatrix, MatrixKind, SpectralError, SpectralSummary, DEFAULT_POWER_TOL,
};
use crate::transforms::{
    collapse_and_pendant, enumerate_gts_moves, gts, is_proper, kelmans, one_step_collapse_images,
    KelmansMove,
};
use crate::tree::{DistanceMatrix, Tree};
use crate::verify::poset::build_poset;
use crate::verify::report::{CampaignReport, CheckRecord, Descriptor, Diagnostics, TheoremId};

/// Covers the λ₁ (α = 0) and scaled μ₁ (α = 1/2) specializations plus
/// interior points.
pub const DEFAULT_ALPHA_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 0.9];

/// Strict inequalities must clear this margin.
pub const DEFAULT_MARGIN_TOL: f64 = 1e-9;

/// Allowed disagreement between power iteration and the Jacobi oracle.
pub const ORACLE_TOL: f64 = 1e-8;

/// Perron weights closer than this are treated as tied and both edge
/// orientations are checked.
pub const PERRON_TIE_TOL: f64 = 1e-10;

enum EngineProblem {
    DisconnectedComplement,
    Spectral(SpectralError),
}

struct KindRadius {
    matrix: DistMatrix,
    summary: SpectralSummary,
    oracle: f64,
}

impl KindRadius {
    fn radius(&self) -> f64 {
        self.summary.radius
    }
}

/// Radii of every requested kind for the complement of one tree, each
/// computed by both engines.
struct RadiusSet {
    kinds: Vec<(MatrixKind, KindRadius)>,
}

impl RadiusSet {
    fn lambda(&self) -> &KindRadius {
        &self.kinds[0].1
    }

    fn mu(&self) -> &KindRadius {
        &self.kinds[1].1
    }

    fn rho(&self, grid_index: usize) -> &KindRadius {
        &self.kinds[2 + grid_index].1
    }
}

fn kind_radius(
    distances: &DistanceMatrix,
    kind: MatrixKind,
    code: CanonicalCode,
) -> Result<KindRadius, EngineProblem> {
    let matrix = DistMatrix::from_distances(kind, distances, code)
        .expect("alpha grid is validated by the campaign");
    let summary = spectral_radius(&matrix, DEFAULT_POWER_TOL).map_err(EngineProblem::Spectral)?;
    let oracle = eig_oracle(&matrix);
    Ok(KindRadius { matrix, summary, oracle })
}

fn distance_radius(t: &Tree) -> Result<KindRadius, EngineProblem> {
    let distances = t.complement_distances().map_err(|_| EngineProblem::DisconnectedComplement)?;
    kind_radius(&distances, MatrixKind::Distance, canonical_code(t))
}

fn radius_set(t: &Tree, alpha_grid: &[f64]) -> Result<RadiusSet, EngineProblem> {
    let distances = t.complement_distances().map_err(|_| EngineProblem::DisconnectedComplement)?;
    let code = canonical_code(t);
    let mut kinds = Vec::with_capacity(2 + alpha_grid.len());
    for kind in [MatrixKind::Distance, MatrixKind::SignlessLaplacian]
        .into_iter()
        .chain(alpha_grid.iter().map(|&a| MatrixKind::DAlpha(a)))
    {
        kinds.push((kind, kind_radius(&distances, kind, code.clone())?));
    }
    Ok(RadiusSet { kinds })
}

fn observe(diag: &mut Diagnostics, kr: &KindRadius) {
    diag.matrices += 1;
    diag.max_oracle_dev = diag.max_oracle_dev.max((kr.radius() - kr.oracle).abs());
    diag.max_residual = diag.max_residual.max(kr.summary.residual);
    let min_entry = kr.summary.perron.iter().copied().fold(f64::INFINITY, f64::min);
    diag.min_perron_entry = diag.min_perron_entry.min(min_entry);
}

fn observe_set(diag: &mut Diagnostics, set: &RadiusSet) {
    for (_, kr) in &set.kinds {
        observe(diag, kr);
    }
}

/// Emits failed records when an engine health bound is violated.
fn guard(records: &mut Vec<CheckRecord>, lead: TheoremId, code: &CanonicalCode, kr: &KindRadius) {
    let label = kr.matrix.kind().radius_label();
    if (kr.radius() - kr.oracle).abs() > ORACLE_TOL {
        records.push(
            CheckRecord::exact(
                lead,
                code.clone(),
                Some(Descriptor::Check { check: format!("oracle_agreement({label})") }),
                kr.radius(),
                kr.oracle,
                false,
            )
            .with_matrix_on_failure(kr.matrix.entries()),
        );
    }
    if kr.summary.perron.iter().any(|&x| x <= 0.0) {
        records.push(
            CheckRecord::exact(
                lead,
                code.clone(),
                Some(Descriptor::Check { check: format!("perron_positivity({label})") }),
                0.0,
                1.0,
                false,
            )
            .with_matrix_on_failure(kr.matrix.entries()),
        );
    }
}

fn guard_set(records: &mut Vec<CheckRecord>, lead: TheoremId, code: &CanonicalCode, set: &RadiusSet) {
    for (_, kr) in &set.kinds {
        guard(records, lead, code, kr);
    }
}

fn engine_failure(lead: TheoremId, code: &CanonicalCode, problem: &EngineProblem) -> CheckRecord {
    let what = match problem {
        EngineProblem::DisconnectedComplement => "image_complement_disconnected".to_string(),
        EngineProblem::Spectral(e) => format!("spectral_engine: {e}"),
    };
    CheckRecord::exact(lead, code.clone(), Some(Descriptor::Check { check: what }), 0.0, 0.0, false)
}

fn assert_alpha_grid(alpha_grid: &[f64]) {
    assert!(
        alpha_grid.iter().all(|a| (0.0..1.0).contains(a)),
        "alpha grid must lie in [0, 1)"
    );
}

/// For every tree of order `n` with diameter >= 4 and every proper shift,
/// records the strict increase of λ₁, μ₁, and every ρ_α of the complement.
pub fn check_gts_monotonicity(n: usize, alpha_grid: &[f64], tol: f64) -> CampaignReport {
    assert!(n >= 5, "diameter >= 4 needs n >= 5");
    assert_alpha_grid(alpha_grid);
    let universe = enumerate_trees_with_codes(n).expect("order inside configured range");
    let per_tree: Vec<(Vec<CheckRecord>, Diagnostics)> = universe
        .par_iter()
        .map(|(tree, code)| {
            let mut records = Vec::new();
            let mut diag = Diagnostics::new();
            if tree.metrics().diameter < 4 {
                return (records, diag);
            }
            let base = match radius_set(tree, alpha_grid) {
                Ok(set) => set,
                Err(p) => {
                    records.push(engine_failure(TheoremId::GtsLambda, code, &p));
                    return (records, diag);
                }
            };
            observe_set(&mut diag, &base);
            guard_set(&mut records, TheoremId::GtsLambda, code, &base);
            for mv in enumerate_gts_moves(tree) {
                if !is_proper(tree, &mv).expect("enumerated move is valid") {
                    continue;
                }
                let image_tree = gts(tree, &mv).expect("enumerated move is valid");
                let image = match radius_set(&image_tree, alpha_grid) {
                    Ok(set) => set,
                    Err(p) => {
                        records.push(engine_failure(TheoremId::GtsLambda, code, &p));
                        continue;
                    }
                };
                observe_set(&mut diag, &image);
                guard_set(&mut records, TheoremId::GtsLambda, code, &image);
                let descriptor = Descriptor::Shift {
                    u: mv.u,
                    v: mv.v,
                    path: mv.path.clone(),
                    w: mv.w,
                    proper: true,
                };
                records.push(
                    CheckRecord::strict(
                        TheoremId::GtsLambda,
                        code.clone(),
                        Some(descriptor.clone()),
                        image.lambda().radius(),
                        base.lambda().radius(),
                        tol,
                    )
                    .with_matrix_on_failure(image.lambda().matrix.entries()),
                );
                records.push(
                    CheckRecord::strict(
                        TheoremId::GtsMu,
                        code.clone(),
                        Some(descriptor.clone()),
                        image.mu().radius(),
                        base.mu().radius(),
                        tol,
                    )
                    .with_matrix_on_failure(image.mu().matrix.entries()),
                );
                for (i, &alpha) in alpha_grid.iter().enumerate() {
                    records.push(
                        CheckRecord::strict(
                            TheoremId::GtsRho(alpha),
                            code.clone(),
                            Some(descriptor.clone()),
                            image.rho(i).radius(),
                            base.rho(i).radius(),
                            tol,
                        )
                        .with_matrix_on_failure(image.rho(i).matrix.entries()),
                    );
                }
            }
            (records, diag)
        })
        .collect();
    finish("gts", n, alpha_grid, tol, per_tree)
}

/// Kelmans shifts oriented by the Perron weights of the complement distance
/// matrix: λ₁ never decreases, with equality exactly when the shifted
/// vertex is pendant. Non-pendant shifts also gain one pendant vertex and
/// drop the diameter by at most one.
pub fn check_kelmans(n: usize, tol: f64) -> CampaignReport {
    assert!(n >= 5, "diameter >= 4 needs n >= 5");
    let universe = enumerate_trees_with_codes(n).expect("order inside configured range");
    let per_tree: Vec<(Vec<CheckRecord>, Diagnostics)> = universe
        .par_iter()
        .map(|(tree, code)| {
            let mut records = Vec::new();
            let mut diag = Diagnostics::new();
            let metrics = tree.metrics();
            if metrics.diameter < 4 {
                return (records, diag);
            }
            let base = match distance_radius(tree) {
                Ok(kr) => kr,
                Err(p) => {
                    records.push(engine_failure(TheoremId::Kelmans, code, &p));
                    return (records, diag);
                }
            };
            observe(&mut diag, &base);
            guard(&mut records, TheoremId::Kelmans, code, &base);
            let weights = &base.summary.perron;
            for &(a, b) in tree.edges() {
                let mut orientations = Vec::with_capacity(2);
                if (weights[a] - weights[b]).abs() <= PERRON_TIE_TOL {
                    orientations.push((a, b));
                    orientations.push((b, a));
                } else if weights[a] > weights[b] {
                    orientations.push((a, b));
                } else {
                    orientations.push((b, a));
                }
                for (u, v) in orientations {
                    let image = kelmans(tree, &KelmansMove { u, v }).expect("uv is an edge");
                    let img = match distance_radius(&image) {
                        Ok(kr) => kr,
                        Err(p) => {
                            records.push(engine_failure(TheoremId::Kelmans, code, &p));
                            continue;
                        }
                    };
                    observe(&mut diag, &img);
                    guard(&mut records, TheoremId::Kelmans, code, &img);
                    let fixed = tree.degree(v) == 1 && tree.neighbors(v)[0] == u;
                    let desc = |check: &str| Descriptor::OrientedEdge { u, v, check: check.into() };
                    let record = if fixed {
                        CheckRecord::equality(
                            TheoremId::Kelmans,
                            code.clone(),
                            Some(desc("radius")),
                            img.radius(),
                            base.radius(),
                            tol,
                        )
                    } else {
                        CheckRecord::strict(
                            TheoremId::Kelmans,
                            code.clone(),
                            Some(desc("radius")),
                            img.radius(),
                            base.radius(),
                            tol,
                        )
                    };
                    records.push(record.with_matrix_on_failure(img.matrix.entries()));
                    if !fixed {
                        let pendants = image.pendant_count() as f64;
                        records.push(CheckRecord::exact(
                            TheoremId::Kelmans,
                            code.clone(),
                            Some(desc("pendant_count")),
                            pendants,
                            (tree.pendant_count() + 1) as f64,
                            image.pendant_count() == tree.pendant_count() + 1,
                        ));
                        let image_diam = image.metrics().diameter;
                        records.push(CheckRecord::exact(
                            TheoremId::Kelmans,
                            code.clone(),
                            Some(desc("diameter")),
                            image_diam as f64,
                            metrics.diameter as f64,
                            image_diam == metrics.diameter || image_diam + 1 == metrics.diameter,
                        ));
                    }
                }
            }
            (records, diag)
        })
        .collect();
    finish("kelmans", n, &[], tol, per_tree)
}

/// Collapsing any non-pendant edge of a diameter >= 4 tree strictly raises
/// λ₁ of the complement. Image complements are always taken by BFS; the
/// image may have diameter 3.
pub fn check_collapse(n: usize, tol: f64) -> CampaignReport {
    assert!(n >= 5, "diameter >= 4 needs n >= 5");
    let universe = enumerate_trees_with_codes(n).expect("order inside configured range");
    let per_tree: Vec<(Vec<CheckRecord>, Diagnostics)> = universe
        .par_iter()
        .map(|(tree, code)| {
            let mut records = Vec::new();
            let mut diag = Diagnostics::new();
            if tree.metrics().diameter < 4 {
                return (records, diag);
            }
            let base = match distance_radius(tree) {
                Ok(kr) => kr,
                Err(p) => {
                    records.push(engine_failure(TheoremId::Collapse, code, &p));
                    return (records, diag);
                }
            };
            observe(&mut diag, &base);
            guard(&mut records, TheoremId::Collapse, code, &base);
            for &(a, b) in tree.edges() {
                if tree.degree(a) < 2 || tree.degree(b) < 2 {
                    continue;
                }
                let image = collapse_and_pendant(tree, (a, b)).expect("non-pendant edge");
                let img = match distance_radius(&image) {
                    Ok(kr) => kr,
                    Err(p) => {
                        records.push(engine_failure(TheoremId::Collapse, code, &p));
                        continue;
                    }
                };
                observe(&mut diag, &img);
                guard(&mut records, TheoremId::Collapse, code, &img);
                records.push(
                    CheckRecord::strict(
                        TheoremId::Collapse,
                        code.clone(),
                        Some(Descriptor::Edge { edge: (a, b) }),
                        img.radius(),
                        base.radius(),
                        tol,
                    )
                    .with_matrix_on_failure(img.matrix.entries()),
                );
            }
            (records, diag)
        })
        .collect();
    finish("collapse", n, &[], tol, per_tree)
}

/// The path uniquely minimizes λ₁, μ₁, and every ρ_α of the complement over
/// all classes except the star.
pub fn check_minimality(n: usize, alpha_grid: &[f64], tol: f64) -> CampaignReport {
    assert!(n >= 4, "minimality needs n >= 4");
    assert_alpha_grid(alpha_grid);
    let universe = enumerate_trees_with_codes(n).expect("order inside configured range");
    let path_code = canonical_code(&Tree::path(n));
    let star_code = canonical_code(&Tree::star(n));
    let path_set = radius_set(&Tree::path(n), alpha_grid).unwrap_or_else(|_| {
        unreachable!("path complement is connected for n >= 4")
    });
    let mut shared_diag = Diagnostics::new();
    observe_set(&mut shared_diag, &path_set);
    let mut seed_records = Vec::new();
    guard_set(&mut seed_records, TheoremId::Minimality, &path_code, &path_set);

    let per_tree: Vec<(Vec<CheckRecord>, Diagnostics)> = universe
        .par_iter()
        .filter(|(_, code)| *code != path_code && *code != star_code)
        .map(|(tree, code)| {
            let mut records = Vec::new();
            let mut diag = Diagnostics::new();
            let set = match radius_set(tree, alpha_grid) {
                Ok(set) => set,
                Err(p) => {
                    records.push(engine_failure(TheoremId::Minimality, code, &p));
                    return (records, diag);
                }
            };
            observe_set(&mut diag, &set);
            guard_set(&mut records, TheoremId::Minimality, code, &set);
            for (i, (kind, kr)) in set.kinds.iter().enumerate() {
                records.push(
                    CheckRecord::strict(
                        TheoremId::Minimality,
                        code.clone(),
                        Some(Descriptor::Radius { kind: kind.radius_label() }),
                        kr.radius(),
                        path_set.kinds[i].1.radius(),
                        tol,
                    )
                    .with_matrix_on_failure(kr.matrix.entries()),
                );
            }
            (records, diag)
        })
        .collect();
    let mut per_tree = per_tree;
    per_tree.push((seed_records, shared_diag));
    finish("minimality", n, alpha_grid, tol, per_tree)
}

/// Complement distances of every diameter >= 4 class equal 1 + adjacency
/// off the diagonal, exactly; the balanced diameter-3 double star breaks
/// the identity at precisely the center pair.
pub fn check_identity(n: usize) -> CampaignReport {
    assert!(n >= 5, "identity sweep needs n >= 5");
    let universe = enumerate_trees_with_codes(n).expect("order inside configured range");
    let mut records: Vec<CheckRecord> = universe
        .par_iter()
        .filter(|(tree, _)| tree.metrics().diameter >= 4)
        .map(|(tree, code)| {
            let bfs = tree
                .complement_distances()
                .expect("diameter >= 4 excludes the star");
            let mismatches = closed_form_mismatches(tree, &bfs);
            let flat: Vec<f64> = (0..tree.n())
                .flat_map(|i| (0..tree.n()).map(move |j| (i, j)))
                .map(|(i, j)| bfs.get(i, j) as f64)
                .collect();
            CheckRecord::exact(
                TheoremId::ComplementIdentity,
                code.clone(),
                None,
                mismatches.len() as f64,
                0.0,
                mismatches.is_empty(),
            )
            .with_matrix_on_failure(&flat)
        })
        .collect();

    // the diameter-3 witness: a balanced double star on the same order
    let witness = Tree::double_star((n - 1) / 2, n - 2 - (n - 1) / 2);
    let bfs = witness.complement_distances().expect("double star is not a star");
    let mismatches = closed_form_mismatches(&witness, &bfs);
    let passed = mismatches == vec![(0, 1)] && bfs.get(0, 1) == 3;
    records.push(CheckRecord::exact(
        TheoremId::ComplementIdentity,
        canonical_code(&witness),
        Some(Descriptor::PairCheck { check: "double_star_witness".into(), pair: (0, 1) }),
        bfs.get(0, 1) as f64,
        2.0,
        passed,
    ));
    CampaignReport::new("identity", n, &[], 0.0, records, Diagnostics::new())
}

/// Vertex pairs where the BFS complement distances differ from
/// 1 + adjacency.
fn closed_form_mismatches(tree: &Tree, bfs: &DistanceMatrix) -> Vec<(usize, usize)> {
    let n = tree.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let expected = if tree.has_edge(i, j) { 2 } else { 1 };
            if bfs.get(i, j) != expected {
                out.push((i, j));
            }
        }
    }
    out
}

/// Classes with exactly three pendant vertices and diameter <= n-3 are
/// absent from the one-step collapse images of the path, yet reachable from
/// the path in the proper-shift poset.
pub fn check_counterexample(n: usize) -> CampaignReport {
    assert!(n >= 6, "counterexample sweep needs n >= 6");
    let images: std::collections::BTreeSet<CanonicalCode> =
        one_step_collapse_images(n).into_iter().collect();
    let poset = build_poset(n);
    let reachable = poset.reachable_from(poset.path_index());
    let mut records = Vec::new();
    for (i, tree) in poset.reps().iter().enumerate() {
        if tree.pendant_count() != 3 || tree.metrics().diameter > n - 3 {
            continue;
        }
        let code = poset.nodes()[i].clone();
        let in_images = images.contains(&code);
        records.push(CheckRecord::exact(
            TheoremId::CollapseGap,
            code.clone(),
            Some(Descriptor::Check { check: "absent_from_collapse_images".into() }),
            in_images as u8 as f64,
            0.0,
            !in_images,
        ));
        records.push(CheckRecord::exact(
            TheoremId::CollapseGap,
            code,
            Some(Descriptor::Check { check: "reachable_from_path".into() }),
            reachable[i] as u8 as f64,
            1.0,
            reachable[i],
        ));
    }
    CampaignReport::new("counterexample", n, &[], 0.0, records, Diagnostics::new())
}

/// Structural facts of the proper-shift poset: the path is the unique
/// source, the star the unique sink, and everything is reachable from the
/// path.
pub fn check_poset(n: usize) -> CampaignReport {
    assert!(n >= 4, "poset needs n >= 4");
    let poset = build_poset(n);
    let in_deg = poset.in_degrees();
    let out_deg = poset.out_degrees();
    let reachable = poset.reachable_from(poset.path_index());
    let mut records = Vec::new();
    for i in 0..poset.nodes().len() {
        let code = poset.nodes()[i].clone();
        if i == poset.path_index() {
            records.push(CheckRecord::exact(
                TheoremId::PosetMinimal,
                code.clone(),
                Some(Descriptor::Check { check: "path_in_degree_zero".into() }),
                in_deg[i] as f64,
                0.0,
                in_deg[i] == 0,
            ));
        } else {
            records.push(CheckRecord::exact(
                TheoremId::PosetMinimal,
                code.clone(),
                Some(Descriptor::Check { check: "reachable_from_path".into() }),
                reachable[i] as u8 as f64,
                1.0,
                reachable[i],
            ));
        }
        if i == poset.star_index() {
            records.push(CheckRecord::exact(
                TheoremId::PosetMaximal,
                code,
                Some(Descriptor::Check { check: "star_out_degree_zero".into() }),
                out_deg[i] as f64,
                0.0,
                out_deg[i] == 0,
            ));
        } else {
            records.push(CheckRecord::exact(
                TheoremId::PosetMaximal,
                code,
                Some(Descriptor::Check { check: "admits_proper_shift".into() }),
                out_deg[i] as f64,
                1.0,
                out_deg[i] >= 1,
            ));
        }
    }
    CampaignReport::new("poset", n, &[], 0.0, records, Diagnostics::new())
}

fn finish(
    campaign: &str,
    n: usize,
    alpha_grid: &[f64],
    tol: f64,
    per_tree: Vec<(Vec<CheckRecord>, Diagnostics)>,
) -> CampaignReport {
    let mut records = Vec::new();
    let mut diag = Diagnostics::new();
    for (mut rs, d) in per_tree {
        records.append(&mut rs);
        diag.absorb(&d);
    }
    CampaignReport::new(campaign, n, alpha_grid, tol, records, diag)
}
