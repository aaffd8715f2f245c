use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use saf_core::ayfamily::{
    ay_boundary_involution, ay_stretch_minpoly, induced_equals_scaled, lift_of_involution, self_similarity_shift,
};
use saf_core::certificates::{
    largest_root_above_one, nonlift_certificate_with, vanishing_by_field_degree, vanishing_by_reciprocity, CertOutcome,
    CertRecord, CompletionOracle, VanishingVerdict, BRUTEFORCE_MAX_K,
};
use saf_core::exactnum::{parse_interval, IntPoly};
use saf_core::iet::saf;
use saf_core::{AlgNum, Error, Iet, NumberField};

use crate::report::Report;

/// Digits shown by `--float`.
pub const FLOAT_DIGITS: usize = 20;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_cap_exceeded() => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// What a command produces on stdout.
pub enum Output {
    Report(Report),
    /// An IET file, printed verbatim.
    File(String),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Display {
    pub float: bool,
}

pub fn load_iet(path: &Path) -> CliResult<Iet> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(Iet::from_file_str(&text)?)
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn parse_minpoly(text: &str) -> CliResult<IntPoly> {
    Ok(text.parse::<IntPoly>()?)
}

fn floats(xs: &[AlgNum]) -> String {
    xs.iter()
        .map(|x| x.to_decimal(FLOAT_DIGITS))
        .collect::<Vec<_>>()
        .join(", ")
}

fn describe_field(f: &Iet) -> String {
    let k = f.field();
    let (lo, hi) = k.root_interval();
    format!("Q[x]/({}), root in ({lo}, {hi})", k.modulus().to_pretty())
}

/// Emits `f` to `out`, or returns the file text for stdout.
fn emit(command: &str, f: &Iet, out: Option<&PathBuf>) -> CliResult<Output> {
    let text = f.to_file_string();
    match out {
        None => Ok(Output::File(text)),
        Some(path) => {
            write_file(path, &text)?;
            let mut r = Report::new(command);
            r.value("output", path.display()).value("intervals", f.len());
            Ok(Output::Report(r))
        }
    }
}

pub fn cmd_saf(command: &str, iet: &Path, display: Display) -> CliResult<Output> {
    let f = load_iet(iet)?;
    let w = saf(&f);
    let mut r = Report::new(command);
    r.input("iet", iet.display())
        .input("field", describe_field(&f))
        .input("intervals", f.len())
        .verdict("saf", if w.is_zero() { "VANISHES" } else { "NONZERO" })
        .value("matrix", w);
    if display.float {
        r.value("lengths_float", floats(f.lengths()))
            .value("translations_float", floats(f.translations()));
    }
    Ok(Output::Report(r))
}

fn vanishing_entries(r: &mut Report, key: &str, v: &VanishingVerdict) {
    r.verdict(key, if v.vanishes { "VANISHES" } else { "NONZERO" });
    for n in &v.notes {
        r.note(format!("{key}: {n}"));
    }
}

pub fn cmd_vanishing(command: &str, minpoly: &str, interval: Option<&str>, display: Display) -> CliResult<Output> {
    let m = parse_minpoly(minpoly)?;
    let iv = interval.map(parse_interval).transpose()?;
    let by_rec = vanishing_by_reciprocity(&m)?;
    let by_deg = vanishing_by_field_degree(&m, iv.as_ref())?;
    let mut r = Report::new(command);
    r.input("minpoly", m.to_pretty());
    if let Some((lo, hi)) = &iv {
        r.input("interval", format!("({lo}, {hi})"));
    }
    vanishing_entries(&mut r, "reciprocity", &by_rec);
    vanishing_entries(&mut r, "field_degree", &by_deg);
    r.verdict("agree", by_rec.vanishes == by_deg.vanishes)
        .value("reversal", by_rec.details.to_pretty())
        .value("minpoly_lambda_plus_inverse", by_deg.details.to_pretty());
    if display.float {
        let (lo, hi) = match &iv {
            Some(x) => x.clone(),
            None => largest_root_above_one(&m)?,
        };
        let k = NumberField::new(&m, &lo, &hi)?;
        r.value("lambda_float", k.generator().to_decimal(FLOAT_DIGITS));
    }
    Ok(Output::Report(r))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleChoice {
    Factorization,
    Bruteforce,
    /// Run both and report whether they agree.
    Both,
}

fn cert_entries(r: &mut Report, prefix: &str, rec: &CertRecord) {
    r.verdict(&format!("{prefix}outcome"), rec.outcome);
    if let Some(reason) = rec.reason {
        r.verdict(&format!("{prefix}reason"), format!("{reason:?}"));
    }
    if let Some(v) = rec.variant {
        r.value(&format!("{prefix}variant"), format!("{v:?}"));
    }
    if let Some(p) = &rec.variant_poly {
        r.value(&format!("{prefix}variant_poly"), p);
    }
    if let Some(q) = &rec.completion {
        r.value(&format!("{prefix}completion_mod2"), q);
    }
}

pub fn cmd_nonlift(command: &str, minpoly: &str, genus: usize, oracle: OracleChoice) -> CliResult<Output> {
    let m = parse_minpoly(minpoly)?;
    let mut r = Report::new(command);
    r.input("minpoly", m.to_pretty())
        .input("genus", genus)
        .input("oracle", format!("{oracle:?}").to_lowercase());
    let primary = match oracle {
        OracleChoice::Bruteforce => CompletionOracle::BruteForce,
        _ => CompletionOracle::Factorization,
    };
    let verdict = nonlift_certificate_with(&m, genus, primary)?;
    let rec = CertRecord::from(&verdict);
    cert_entries(&mut r, "", &rec);
    if let CertOutcome::CertifiedNotLift(reason) = verdict.outcome {
        r.note(reason.to_string());
    }
    match verdict.irreducible_mod {
        Some(p) => r.value("irreducible_mod", p),
        None => r.note("irreducibility over Q not certified by any trial prime"),
    };
    if oracle == OracleChoice::Both {
        let d = m.degree().unwrap_or(0);
        if genus >= d && genus - d > BRUTEFORCE_MAX_K {
            r.note(format!(
                "brute-force cross-check skipped: completion degree exceeds {BRUTEFORCE_MAX_K}"
            ));
        } else {
            let check = nonlift_certificate_with(&m, genus, CompletionOracle::BruteForce)?;
            let same = match (&verdict.outcome, &check.outcome) {
                (CertOutcome::CertifiedNotLift(a), CertOutcome::CertifiedNotLift(b)) => a == b,
                (CertOutcome::Inconclusive { .. }, CertOutcome::Inconclusive { .. }) => true,
                _ => false,
            };
            cert_entries(&mut r, "bruteforce_", &CertRecord::from(&check));
            r.verdict("oracles_agree", same);
        }
    }
    Ok(Output::Report(r))
}

pub fn cmd_ay(command: &str, genus: usize, check: bool, out: Option<&PathBuf>, display: Display) -> CliResult<Output> {
    let involution = ay_boundary_involution(genus)?;
    let lift = lift_of_involution(&involution)?;
    if !check {
        return emit(command, &lift, out);
    }
    if let Some(path) = out {
        write_file(path, &lift.to_file_string())?;
    }
    let k = lift.field();
    let (lo, hi) = k.root_interval();
    let mut r = Report::new(command);
    r.input("genus", genus);
    if let Some(path) = out {
        r.input("output", path.display());
    }

    let id2 = Iet::identity(k, involution.total().clone(), true)?;
    let is_involution = involution.compose(&involution)? == id2;
    let saf_zero = saf(&lift).is_zero();
    let involution_saf_zero = saf(&involution).is_zero();
    let shift = self_similarity_shift(&lift)?;
    let stretch = ay_stretch_minpoly(genus)?;
    let rec = vanishing_by_reciprocity(&stretch)?;
    let cert = nonlift_certificate_with(&stretch, genus, CompletionOracle::Factorization)?;
    let inconclusive = !cert.is_certified();

    let all =
        is_involution && saf_zero && involution_saf_zero && shift.is_some() && rec.vanishes == saf_zero && inconclusive;
    r.verdict("involution", is_involution)
        .verdict("saf_involution_zero", involution_saf_zero)
        .verdict("saf_lift_zero", saf_zero)
        .verdict("self_similar", shift.is_some())
        .verdict("reciprocity_matches_saf", rec.vanishes == saf_zero)
        .verdict("certificate_inconclusive", inconclusive)
        .verdict("checks", if all { "PASS" } else { "FAIL" });
    r.value("alpha_interval", format!("({lo}, {hi})"))
        .value("stretch_minpoly", stretch.to_pretty())
        .value("lift_intervals", lift.len());
    if let Some(c) = &shift {
        r.value("self_similarity_shift", c);
        if display.float {
            r.value("self_similarity_shift_float", c.to_decimal(FLOAT_DIGITS));
        }
    }
    r.value("fixed_origin_equality", induced_equals_scaled(&lift)?);
    r.note("self_similar: first return to [0, alpha) equals the alpha-scaled lift up to a rotation of the circle of length alpha by self_similarity_shift");
    if display.float {
        r.value("alpha_float", k.generator().to_decimal(FLOAT_DIGITS));
    }
    Ok(Output::Report(r))
}

pub fn cmd_induce(command: &str, iet: &Path, sub: &str, cap: usize, out: Option<&PathBuf>) -> CliResult<Output> {
    let f = load_iet(iet)?;
    let b = f.field().parse_element(sub)?;
    let induced = f.first_return_with_cap(&b, cap)?.map;
    emit(command, &induced, out)
}

pub fn cmd_lift(command: &str, iet: &Path, out: Option<&PathBuf>) -> CliResult<Output> {
    let f = load_iet(iet)?;
    emit(command, &lift_of_involution(&f)?, out)
}

pub fn cmd_compose(command: &str, iet: &Path, iet2: &Path, out: Option<&PathBuf>) -> CliResult<Output> {
    let f = load_iet(iet)?;
    let g = load_iet(iet2)?;
    emit(command, &f.compose(&g)?, out)
}

pub fn cmd_inverse(command: &str, iet: &Path, out: Option<&PathBuf>) -> CliResult<Output> {
    let f = load_iet(iet)?;
    emit(command, &f.inverse()?, out)
}

pub fn cmd_scale(command: &str, iet: &Path, by: &str, out: Option<&PathBuf>) -> CliResult<Output> {
    let f = load_iet(iet)?;
    let s = f.field().parse_element(by)?;
    emit(command, &f.scale(&s)?, out)
}

pub fn cmd_diff(command: &str, iet: &Path, iet2: &Path, up_to_rotation: bool) -> CliResult<Output> {
    let f = load_iet(iet)?;
    let g = load_iet(iet2)?;
    let mut r = Report::new(command);
    r.input("left", iet.display()).input("right", iet2.display());
    if f.field() != g.field() {
        r.verdict("equal", false).value("field", "differs");
        return Ok(Output::Report(r));
    }
    if f.total() != g.total() {
        r.verdict("equal", false)
            .value("left_total", f.total())
            .value("right_total", g.total());
        return Ok(Output::Report(r));
    }
    r.verdict("equal", f == g);
    if up_to_rotation {
        match f.with_circle(true).rotation_conjugator(&g.clone().with_circle(true))? {
            Some(c) => r.verdict("equal_up_to_rotation", true).value("rotation", c),
            None => r.verdict("equal_up_to_rotation", false),
        };
    } else if f != g {
        let (a, b) = (f.canonical(), g.canonical());
        for (side, h) in [("left", &a), ("right", &b)] {
            let rows: Vec<String> = (0..h.len())
                .map(|i| format!("[{}] len {} t {}", i, h.lengths()[i], h.translations()[i]))
                .collect();
            r.value(&format!("{side}_canonical"), rows.join("\n"));
        }
    }
    Ok(Output::Report(r))
}
