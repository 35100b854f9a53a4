//! `det`, `verify`, `pfaffian`, and `embed`.

use std::io::Read;
use std::path::Path;

use detident::det::{complementary_minor, det_bareiss, det_dodgson, det_laplace, first_minor};
use detident::jacobi::{
    generalized_pluecker_residual, generalized_selections, jacobi_residual,
    minor_three_term_residual, three_term_selections, verify_all_jacobi, verify_generalized,
    verify_minor_three_term,
};
use detident::matrix::{submatrix_delete, IndexSet, Matrix};
use detident::matrix_file::{emit_matrix, parse_matrix, Format, MatrixJson};
use detident::pfaffian::{
    determinant_embedding, embedded_minor, jacobi_recurrence_residual,
    recurrence_minors, AntisymmetricMatrix, Label,
};
use detident::pluecker::{pluecker_sum, three_term_residual};
use detident::sample::TrialRng;
use detident::Scalar;

use crate::report::{CheckRecord, Invocation, RunReport};
use crate::{
    CliError, Engine, FormatArg, IdentityArg, Outcome, PfaffianCheck, EXHAUSTIVE_MAX_N,
    LAPLACE_MAX_N, SAMPLED_SELECTIONS,
};

pub fn read_matrix(path: &Path) -> Result<Matrix, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?
    };
    parse_matrix(&text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn square_dims(a: &Matrix) -> Result<String, CliError> {
    if a.is_square() {
        Ok(format!("{}x{}", a.rows(), a.cols()))
    } else {
        Err(CliError(format!("expected a square matrix, got {}x{}", a.rows(), a.cols())))
    }
}

fn engine_name(engine: Engine) -> &'static str {
    match engine {
        Engine::Laplace => "laplace",
        Engine::Bareiss => "bareiss",
        Engine::Dodgson => "dodgson",
        Engine::All => "all",
    }
}

pub fn det(file: &Path, engine: Engine) -> Result<Outcome, CliError> {
    let a = read_matrix(file)?;
    let dims = square_dims(&a)?;
    let n = a.rows();
    let mut results = Vec::new();
    let mut values: Vec<(&str, Scalar)> = Vec::new();

    if engine == Engine::Laplace || (engine == Engine::All && n <= LAPLACE_MAX_N) {
        let v = det_laplace(&a)?;
        results.push(CheckRecord::new("det/laplace", dims.clone(), true).value(&v));
        values.push(("laplace", v));
    }
    if matches!(engine, Engine::Bareiss | Engine::All) {
        let v = det_bareiss(&a)?;
        results.push(CheckRecord::new("det/bareiss", dims.clone(), true).value(&v));
        values.push(("bareiss", v));
    }
    if matches!(engine, Engine::Dodgson | Engine::All) {
        let d = det_dodgson(&a)?;
        results.push(
            CheckRecord::new("det/dodgson", dims.clone(), true)
                .value(&d.value)
                .detail(format!("fallback={} depth={}", d.fallback_used, d.fallback_depth)),
        );
        values.push(("dodgson", d.value));
    }
    if engine == Engine::All {
        let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
        let names: Vec<&str> = values.iter().map(|(k, _)| *k).collect();
        let mut record = CheckRecord::new("det/agreement", dims, agree)
            .detail(format!("engines={}", names.join(",")));
        if !agree {
            for (name, v) in &values {
                record = record.witness(*name, v);
            }
        }
        results.push(record);
    }

    let command = Invocation::new("det")
        .param("file", file.display())
        .param("engine", engine_name(engine));
    Ok(Outcome { report: RunReport::new(command, None, results), preamble: None })
}

/// Optional index selections for `verify`.
#[derive(Debug, Clone, Default)]
pub struct VerifySelection {
    pub pair: Option<Vec<usize>>,
    pub rows: Option<Vec<usize>>,
    pub cols: Option<Vec<usize>>,
    pub r: Option<usize>,
    pub seed: u64,
}

impl VerifySelection {
    fn is_empty(&self) -> bool {
        self.pair.is_none() && self.rows.is_none() && self.cols.is_none() && self.r.is_none()
    }
}

fn identity_name(identity: IdentityArg) -> &'static str {
    match identity {
        IdentityArg::Jacobi => "jacobi",
        IdentityArg::ThreeTerm => "three-term",
        IdentityArg::Generalized => "generalized",
        IdentityArg::Pluecker => "pluecker",
        IdentityArg::All => "all",
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

fn index_set(v: &[usize]) -> Result<IndexSet, CliError> {
    Ok(IndexSet::new(v.to_vec())?)
}

/// Every choice for small n, otherwise a seeded sample.
fn sweep(
    n: usize,
    rows: usize,
    cols: usize,
    seed: u64,
    stream: u64,
) -> Vec<(IndexSet, IndexSet)> {
    if n <= EXHAUSTIVE_MAX_N {
        if rows == 2 && cols == 4 {
            three_term_selections(n).collect()
        } else {
            generalized_selections(n, rows).collect()
        }
    } else {
        let mut rng = TrialRng::new(seed, stream);
        (0..SAMPLED_SELECTIONS)
            .map(|_| (rng.subset(n, rows), rng.subset(n, cols)))
            .collect()
    }
}

fn verify_jacobi(a: &Matrix, sel: &VerifySelection) -> Result<CheckRecord, CliError> {
    if sel.rows.is_some() || sel.cols.is_some() || sel.r.is_some() {
        return Err(usage("jacobi takes only --pair"));
    }
    match &sel.pair {
        Some(pair) => {
            let [i, j] = pair.as_slice() else {
                return Err(usage("--pair needs exactly two indices i,j"));
            };
            let residual = jacobi_residual(a, *i, *j)?;
            Ok(CheckRecord::residual("jacobi", format!("{}x{} i={i} j={j}", a.rows(), a.cols()), &residual))
        }
        None => Ok(CheckRecord::from_identity(&verify_all_jacobi(a)?)),
    }
}

fn verify_three_term(a: &Matrix, sel: &VerifySelection) -> Result<CheckRecord, CliError> {
    if sel.pair.is_some() || sel.r.is_some() {
        return Err(usage("three-term takes only --rows and --cols"));
    }
    let n = a.rows();
    if n < 4 {
        return Err(usage(format!("three-term needs n >= 4, got {n}")));
    }
    match (&sel.rows, &sel.cols) {
        (Some(rows), Some(cols)) => {
            let (rows, cols) = (index_set(rows)?, index_set(cols)?);
            let residual = minor_three_term_residual(a, &rows, &cols)?;
            Ok(CheckRecord::residual(
                "minor-three-term",
                format!("{n}x{n} rows={rows} cols={cols}"),
                &residual,
            ))
        }
        (None, None) => {
            let report = verify_minor_three_term(a, sweep(n, 2, 4, sel.seed, 0))?;
            Ok(CheckRecord::from_identity(&report))
        }
        _ => Err(usage("--rows and --cols must be given together")),
    }
}

fn verify_generalized_all(a: &Matrix, sel: &VerifySelection) -> Result<Vec<CheckRecord>, CliError> {
    if sel.pair.is_some() {
        return Err(usage("generalized takes --r, --rows and --cols"));
    }
    let n = a.rows();
    match (&sel.rows, &sel.cols) {
        (Some(rows), Some(cols)) => {
            if sel.r.is_some_and(|r| r != rows.len()) {
                return Err(usage("--r disagrees with the number of --rows"));
            }
            let (rows, cols) = (index_set(rows)?, index_set(cols)?);
            let residual = generalized_pluecker_residual(a, &rows, &cols)?;
            Ok(vec![CheckRecord::residual(
                "generalized-pluecker",
                format!("{n}x{n} rows={rows} cols={cols}"),
                &residual,
            )])
        }
        (None, None) => {
            let rs: Vec<usize> = match sel.r {
                Some(r) if r == 0 || 2 * r > n => {
                    return Err(usage(format!("r = {r} needs 1 <= r and 2r <= n = {n}")))
                }
                Some(r) => vec![r],
                None => (1..=n / 2).collect(),
            };
            if rs.is_empty() {
                return Err(usage(format!("generalized needs n >= 2, got {n}")));
            }
            rs.into_iter()
                .map(|r| {
                    let report = verify_generalized(a, sweep(n, r, 2 * r, sel.seed, r as u64))?;
                    let mut record = CheckRecord::from_identity(&report);
                    record.operands = format!("{n}x{n} r={r}");
                    Ok(record)
                })
                .collect()
        }
        _ => Err(usage("--rows and --cols must be given together")),
    }
}

/// An n×(n+r) file: the first n−r columns are the block, the last 2r the vectors.
fn verify_pluecker(a: &Matrix) -> Result<Vec<CheckRecord>, CliError> {
    let (n, m) = (a.rows(), a.cols());
    if m <= n || m - n > n {
        return Err(usage(format!(
            "pluecker needs an n×(n+r) matrix with 1 <= r <= n, got {n}x{m}"
        )));
    }
    let r = m - n;
    let block = submatrix_delete(a, &IndexSet::empty(), &IndexSet::new((n - r + 1..=m).collect())?)?;
    let vectors = (n - r + 1..=m).map(|j| a.column(j)).collect::<Result<Vec<_>, _>>()?;
    let operands = format!("{n}x{m} r={r}");
    let mut records = vec![CheckRecord::residual("pluecker", operands.clone(), &pluecker_sum(&block, &vectors)?)];
    if r == 2 {
        let residual = three_term_residual(&block, &vectors[0], &vectors[1], &vectors[2], &vectors[3])?;
        records.push(CheckRecord::residual("pluecker-three-term", operands, &residual));
    }
    Ok(records)
}

pub fn verify(file: &Path, identity: IdentityArg, sel: &VerifySelection) -> Result<Outcome, CliError> {
    let a = read_matrix(file)?;
    let wide = a.cols() > a.rows();
    let mut results = Vec::new();
    match identity {
        IdentityArg::Pluecker => {
            if !sel.is_empty() {
                return Err(usage("pluecker takes no index selections"));
            }
            results.extend(verify_pluecker(&a)?);
        }
        IdentityArg::All if wide => {
            if !sel.is_empty() {
                return Err(usage("index selections need a specific --identity"));
            }
            results.extend(verify_pluecker(&a)?);
        }
        IdentityArg::All => {
            square_dims(&a)?;
            if !sel.is_empty() {
                return Err(usage("index selections need a specific --identity"));
            }
            let n = a.rows();
            if n < 2 {
                return Err(usage("no identity applies to a 1x1 matrix"));
            }
            results.push(verify_jacobi(&a, sel)?);
            if n >= 4 {
                results.push(verify_three_term(&a, sel)?);
            }
            results.extend(verify_generalized_all(&a, sel)?);
        }
        IdentityArg::Jacobi => {
            square_dims(&a)?;
            results.push(verify_jacobi(&a, sel)?);
        }
        IdentityArg::ThreeTerm => {
            square_dims(&a)?;
            results.push(verify_three_term(&a, sel)?);
        }
        IdentityArg::Generalized => {
            square_dims(&a)?;
            results.extend(verify_generalized_all(&a, sel)?);
        }
    }

    let join = |v: &Option<Vec<usize>>| v.as_ref().map(|v| v.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
    let mut command = Invocation::new("verify")
        .param("file", file.display())
        .param("identity", identity_name(identity))
        .param("seed", sel.seed);
    for (key, value) in [("pair", join(&sel.pair)), ("rows", join(&sel.rows)), ("cols", join(&sel.cols))] {
        if let Some(v) = value {
            command = command.param(key, v);
        }
    }
    if let Some(r) = sel.r {
        command = command.param("r", r);
    }
    Ok(Outcome { report: RunReport::new(command, None, results), preamble: None })
}

/// Residual and minor facts of the perfect-square recurrence at every level,
/// from the full order down to 2.
pub fn recurrence_records(a: &AntisymmetricMatrix) -> Result<Vec<CheckRecord>, CliError> {
    let mut records = Vec::new();
    let mut current = a.clone();
    while current.order() >= 2 {
        let residual = jacobi_recurrence_residual(&current)?;
        let m = recurrence_minors(&current)?;
        let facts = m.m11.is_zero() && m.m22.is_zero() && m.m12 == -m.m21.clone();
        records.push(
            CheckRecord::new("recurrence", format!("order={}", current.order()), residual.is_zero() && facts)
                .value(&residual)
                .detail(format!("M11={} M22={} M12={} M21={}", m.m11, m.m22, m.m12, m.m21)),
        );
        current = current.delete_leading_pair()?;
    }
    Ok(records)
}

pub fn pfaffian(file: &Path, check: PfaffianCheck) -> Result<Outcome, CliError> {
    let a = read_matrix(file)?;
    let skew = AntisymmetricMatrix::from_matrix(&a)?;
    let operands = format!("order={}", skew.order());
    let pf = detident::pfaffian::pfaffian(&skew);
    let mut results = vec![CheckRecord::new("pfaffian", operands.clone(), true).value(&pf)];
    match check {
        PfaffianCheck::None => {}
        PfaffianCheck::Square => {
            let det = det_bareiss(&a)?;
            results.push(CheckRecord::new("det", operands.clone(), true).value(&det));
            results.push(CheckRecord::residual("pfaffian-square", operands, &(pf.square() - det)));
        }
        PfaffianCheck::Recurrence => results.extend(recurrence_records(&skew)?),
    }
    let check_name = match check {
        PfaffianCheck::None => "none",
        PfaffianCheck::Square => "square",
        PfaffianCheck::Recurrence => "recurrence",
    };
    let command = Invocation::new("pfaffian").param("file", file.display()).param("check", check_name);
    Ok(Outcome { report: RunReport::new(command, None, results), preamble: None })
}

/// Checks `Pf(B) = det A` and, with `minors`, the label forms of `M_ij` and of
/// the doubly-deleted minors.
pub fn embed_records(a: &Matrix, b: &AntisymmetricMatrix, minors: bool) -> Result<Vec<CheckRecord>, CliError> {
    let n = a.rows();
    let pf = detident::pfaffian::pfaffian(b);
    let det = det_bareiss(a)?;
    let mut records = vec![CheckRecord::new("embed", format!("{n}x{n}"), pf == det)
        .value(&pf)
        .detail(format!("det={det}"))];
    if !minors {
        return Ok(records);
    }

    let mut first = CheckRecord::new("embed-first-minor", format!("{n}x{n}"), true);
    let mut checked = 0;
    for i in 1..=n {
        for j in 1..=n {
            let got = embedded_minor(a, &[Label::Row(i), Label::Star(j)])?;
            let want = first_minor(a, i, j)?;
            checked += 1;
            if got != want {
                first.pass = false;
                first = first.witness(format!("i={i} j={j}"), &(got - want));
            }
        }
    }
    records.push(first.checked(checked));

    if n >= 2 {
        let mut pair = CheckRecord::new("embed-pair-minor", format!("{n}x{n}"), true);
        let mut checked = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                let remove = [Label::Row(i), Label::Row(j), Label::Star(i), Label::Star(j)];
                let got = embedded_minor(a, &remove)?;
                let set = IndexSet::new(vec![i, j])?;
                let want = complementary_minor(a, &set, &set)?;
                checked += 1;
                if got != want {
                    pair.pass = false;
                    pair = pair.witness(format!("i={i} j={j}"), &(got - want));
                }
            }
        }
        records.push(pair.checked(checked));
    }
    Ok(records)
}

pub fn embed(file: &Path, minors: bool, format: FormatArg) -> Result<Outcome, CliError> {
    let a = read_matrix(file)?;
    square_dims(&a)?;
    let b = determinant_embedding(&a)?;
    let results = embed_records(&a, &b, minors)?;
    let command = Invocation::new("embed").param("file", file.display()).param("minors", minors);
    let mut report = RunReport::new(command, None, results);
    let b_matrix = b.to_matrix();
    let preamble = match format {
        FormatArg::Text => Some(emit_matrix(&b_matrix, Format::Text)),
        FormatArg::Json => {
            report.matrix = Some(MatrixJson::from(&b_matrix));
            None
        }
    };
    Ok(Outcome { report, preamble })
}
