//! Seeded random differential checks.
//!
//! Trial `t` draws all of its data from `TrialRng::new(seed, t)` (see
//! `detident::sample` for the generator) in this fixed order, whether or not
//! the corresponding check is selected:
//!
//! 1. `n = uniform_int(2, size_max)`, then the n×n matrix `A`.
//! 2. Four three-term choices: `subset(n, 2)`, `subset(n, 4)` each (skipped
//!    when `n < 4`).
//! 3. `r = uniform_int(1, n / 2)`, then four choices `subset(n, r)`,
//!    `subset(n, 2r)`.
//! 4. `q = uniform_int(1, min(3, n))`, the n×(n−q) block, then `2q` vectors.
//! 5. `h = uniform_int(1, max(1, min(size_max, 12) / 2))` and an
//!    antisymmetric matrix of order `2h`.
//!
//! Entries are uniform in `[−entry_bound, entry_bound]`.

use detident::det::{det_bareiss, det_dodgson, det_laplace};
use detident::jacobi::{verify_all_jacobi, verify_generalized, verify_minor_three_term};
use detident::pfaffian::{determinant_embedding, pfaffian_square_residual};
use detident::pluecker::{pluecker_sum, three_term_residual};
use detident::sample::TrialRng;

use crate::commands::{embed_records, recurrence_records};
use crate::report::{CheckRecord, Invocation, RunReport};
use crate::{CliError, FuzzSelection, Outcome, LAPLACE_MAX_N};

/// Largest antisymmetric order generated.
pub const PFAFFIAN_MAX_ORDER: usize = 12;
/// Largest `n` whose 2n-order Pfaffian embedding is checked.
pub const EMBED_MAX_N: usize = 6;
/// Largest `n` whose embedded minors are all checked.
pub const EMBED_MINORS_MAX_N: usize = 4;
/// Index choices drawn per minor relation per trial.
pub const CHOICES_PER_TRIAL: usize = 4;

pub const ALGORITHM_HELP: &str = "\
Generator: ChaCha8 (rand_chacha 0.9) keyed by rand_core 0.9 seed_from_u64(seed), \
stream id = trial index, so trial t depends only on (seed, t). Uniform [0,s): draw a \
u64, reject while x >= floor((2^64-1)/s)*s, return x mod s. Per trial: n in [2,size_max], \
then A (row-major), 4 three-term choices (n>=4), r in [1,n/2] and 4 generalized choices, \
q in [1,min(3,n)] with an n x (n-q) block and 2q vectors, then an antisymmetric matrix of \
order 2h, h in [1,max(1,min(size_max,12)/2)]. Engines: laplace only for n<=8. Embedding \
checked for n<=6, with all minors for n<=4.";

#[derive(Debug, Clone)]
pub struct FuzzParams {
    pub seed: u64,
    pub trials: u64,
    pub size_max: usize,
    pub entry_bound: i64,
    pub selection: FuzzSelection,
}

fn selection_name(s: FuzzSelection) -> &'static str {
    match s {
        FuzzSelection::All => "all",
        FuzzSelection::Engines => "engines",
        FuzzSelection::Jacobi => "jacobi",
        FuzzSelection::ThreeTerm => "three-term",
        FuzzSelection::Generalized => "generalized",
        FuzzSelection::Pluecker => "pluecker",
        FuzzSelection::Pfaffian => "pfaffian",
        FuzzSelection::Embed => "embed",
    }
}

pub fn validate(params: &FuzzParams) -> Result<(), CliError> {
    if params.trials < 1 {
        return Err(CliError("--trials must be at least 1".into()));
    }
    if params.size_max < 2 {
        return Err(CliError("--size-max must be at least 2".into()));
    }
    if params.entry_bound < 1 {
        return Err(CliError("--entry-bound must be at least 1".into()));
    }
    Ok(())
}

pub fn trial_records(params: &FuzzParams, trial: u64) -> Result<Vec<CheckRecord>, CliError> {
    let bound = params.entry_bound;
    let mut rng = TrialRng::new(params.seed, trial);

    let n = rng.usize_in(2, params.size_max);
    let a = rng.matrix(n, n, bound);
    let three_term: Vec<_> = if n >= 4 {
        (0..CHOICES_PER_TRIAL).map(|_| (rng.subset(n, 2), rng.subset(n, 4))).collect()
    } else {
        Vec::new()
    };
    let r = rng.usize_in(1, n / 2);
    let generalized: Vec<_> = (0..CHOICES_PER_TRIAL)
        .map(|_| (rng.subset(n, r), rng.subset(n, 2 * r)))
        .collect();
    let q = rng.usize_in(1, n.min(3));
    let block = rng.matrix(n, n - q, bound);
    let vectors: Vec<_> = (0..2 * q).map(|_| rng.column(n, bound)).collect();
    let half = rng.usize_in(1, (params.size_max.min(PFAFFIAN_MAX_ORDER) / 2).max(1));
    let skew = rng.antisymmetric(2 * half, bound);

    let wants = |s: FuzzSelection| params.selection == FuzzSelection::All || params.selection == s;
    let dims = format!("{n}x{n}");
    let mut records = Vec::new();

    if wants(FuzzSelection::Engines) {
        let bareiss = det_bareiss(&a)?;
        let dodgson = det_dodgson(&a)?;
        let mut agree = dodgson.value == bareiss;
        let mut engines = "bareiss,dodgson";
        if n <= LAPLACE_MAX_N {
            agree &= det_laplace(&a)? == bareiss;
            engines = "laplace,bareiss,dodgson";
        }
        records.push(
            CheckRecord::new("engines", dims.clone(), agree)
                .value(&bareiss)
                .detail(format!(
                    "engines={engines} fallback={} depth={}",
                    dodgson.fallback_used, dodgson.fallback_depth
                )),
        );
    }
    if wants(FuzzSelection::Jacobi) {
        records.push(CheckRecord::from_identity(&verify_all_jacobi(&a)?));
    }
    if wants(FuzzSelection::ThreeTerm) && !three_term.is_empty() {
        records.push(CheckRecord::from_identity(&verify_minor_three_term(&a, three_term)?));
    }
    if wants(FuzzSelection::Generalized) {
        let mut record = CheckRecord::from_identity(&verify_generalized(&a, generalized)?);
        record.operands = format!("{dims} r={r}");
        records.push(record);
    }
    if wants(FuzzSelection::Pluecker) {
        let operands = format!("{n}x{} r={q}", n - q);
        records.push(CheckRecord::residual("pluecker", operands.clone(), &pluecker_sum(&block, &vectors)?));
        if q == 2 {
            let residual = three_term_residual(&block, &vectors[0], &vectors[1], &vectors[2], &vectors[3])?;
            records.push(CheckRecord::residual("pluecker-three-term", operands, &residual));
        }
    }
    if wants(FuzzSelection::Pfaffian) {
        let operands = format!("order={}", skew.order());
        records.push(CheckRecord::residual("pfaffian-square", operands.clone(), &pfaffian_square_residual(&skew)?));
        let levels = recurrence_records(&skew)?;
        let mut record = CheckRecord::new("recurrence", operands, levels.iter().all(|l| l.pass))
            .checked(levels.len());
        for level in levels.iter().filter(|l| !l.pass) {
            record = record.witness(level.operands.clone(), level.value.as_deref().unwrap_or("?"));
        }
        records.push(record);
    }
    if wants(FuzzSelection::Embed) && n <= EMBED_MAX_N {
        let b = determinant_embedding(&a)?;
        records.extend(embed_records(&a, &b, n <= EMBED_MINORS_MAX_N)?);
    }

    for record in &mut records {
        record.trial = Some(trial);
    }
    Ok(records)
}

pub fn run_fuzz(params: &FuzzParams) -> Result<Outcome, CliError> {
    validate(params)?;
    let mut results = Vec::new();
    for t in 0..params.trials {
        results.extend(trial_records(params, t)?);
    }
    let command = Invocation::new("fuzz")
        .param("seed", params.seed)
        .param("trials", params.trials)
        .param("size_max", params.size_max)
        .param("entry_bound", params.entry_bound)
        .param("identity", selection_name(params.selection));
    Ok(Outcome {
        report: RunReport::new(command, Some(params.seed), results),
        preamble: None,
    })
}
