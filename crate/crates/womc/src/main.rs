use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use womc::format::{self, FormatError};
use womc::messages::{self, MessageError};
use womc_core::field::{irreducible_poly, MAX_K};
use womc_core::image::SchemeParams;
use womc_core::lookupfree::{self, LookupFreeCode};
use womc_core::ranking::{binomial, perm_rank, perm_unrank, subset_unrank};
use womc_core::rate::{self, RateReport};
use womc_core::rivest_shamir::{self, Symbol};
use womc_core::wom2::{self, Wom2Params};
use womc_core::wom3::{self, Variant, Wom3Params};
use womc_core::wozencraft::{
    count_spanning, ensemble_matrix, find_good_matrix, guarantee_holds, is_good,
};
use womc_core::{
    stuckat, BitVector, Error, FieldElement, IndexSet, MemoryImage, Scheme, WozParams,
};

/// Multi-round coding for write-once memories: create, write, and read
/// image files, print rate figures, and verify the counting claims the
/// schemes rest on.
#[derive(Parser)]
#[command(name = "womc", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the modulus polynomial of every supported field degree,
    /// lowest degree first, one comma-separated line per degree.
    FieldTable,
    /// Exhaustively check the matrix-family counting claims for one shape.
    VerifyEnsemble {
        /// Matrix rows (at most 8 here; checks cost 2^(2k+b) rank tests).
        #[arg(long)]
        k: usize,
        /// Redundancy columns beyond the identity part.
        #[arg(long)]
        b: usize,
    },
    /// Closed-form rate curves and their optima.
    #[command(subcommand)]
    Analyze(AnalyzeCmd),
    /// One three-cell memory holding a quaternary symbol, writable twice.
    #[command(subcommand)]
    Rs(RsCmd),
    /// Two-round block code: small sets first, then one bit per matrix row.
    #[command(subcommand)]
    Wom2(Wom2Cmd),
    /// Three-round code over quaternary words with a chunked third write.
    #[command(subcommand)]
    Wom3(Wom3Cmd),
    /// Two-round code with one fixed matrix and no side tables.
    #[command(subcommand)]
    Lookupfree(LookupfreeCmd),
    /// One-shot writes around stuck cells.
    #[command(subcommand)]
    Defect(DefectCmd),
}

#[derive(Subcommand)]
enum AnalyzeCmd {
    /// Two-round capacity curve H(p) + 1 - p and its maximum.
    Capacity {
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        #[arg(long)]
        json: bool,
    },
    /// The point where both rounds carry the same bit count; the curve
    /// column is the residual H(p) - (1 - p) whose root it is.
    EqualRate {
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        #[arg(long)]
        json: bool,
    },
    /// Three-round rate curve of one variant and its maximum.
    Rate3 {
        #[arg(long)]
        variant: VariantArg,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RsCmd {
    /// Write the first symbol into a fresh image.
    Encode1 {
        #[arg(long)]
        symbol: u8,
        #[arg(long)]
        image: PathBuf,
    },
    /// Write a second symbol over the first.
    Encode2 {
        #[arg(long)]
        symbol: u8,
        #[arg(long)]
        image: PathBuf,
    },
    /// Print the symbol the image currently holds.
    Decode {
        #[arg(long)]
        image: PathBuf,
    },
}

#[derive(Subcommand)]
enum Wom2Cmd {
    /// First write: the message file holds one set rank per line, one
    /// line per block, in the order that lists sets by size then
    /// colexicographically.
    Encode1 {
        /// k,b,t,g,smax: matrix shape, block count, group size, set cap.
        #[arg(long, value_parser = parse_wom2_params)]
        params: Wom2Params,
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        message: PathBuf,
    },
    /// Second write: the message file holds a t*k-bit payload string.
    Encode2 {
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        message: PathBuf,
    },
    /// Print the stored sets (round 1) or the payload bits (round 2).
    Decode {
        #[arg(long)]
        image: PathBuf,
    },
    /// Print the two-round rate figures for a parameter choice.
    Rate {
        #[arg(long, value_parser = parse_wom2_params)]
        params: Wom2Params,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Wom3Cmd {
    /// First write of a quaternary word that meets the zero quota.
    Write1 {
        #[arg(long)]
        variant: VariantArg,
        /// Quarter word length: the word has 4m symbols.
        #[arg(long)]
        m: usize,
        /// Zeros the first word must contain.
        #[arg(long)]
        z: usize,
        /// k,b shape of the third-round chunks.
        #[arg(long, value_parser = parse_chunk)]
        chunk: WozParams,
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        message: PathBuf,
    },
    /// Second write of a word using every symbol exactly m times.
    Write2 {
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        message: PathBuf,
    },
    /// Third write of a payload bitstring into the chunks still writable.
    Write3 {
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        payload: PathBuf,
    },
    /// Print the stored word (rounds 1-2) or payload bits (round 3).
    Read {
        #[arg(long)]
        image: PathBuf,
    },
    /// Print how many payload bits a third write can still store.
    Capacity {
        #[arg(long)]
        image: PathBuf,
    },
}

#[derive(Subcommand)]
enum LookupfreeCmd {
    /// Classify every tuple under one seed and print the rate figures.
    Build {
        /// Cells per tuple.
        #[arg(long)]
        m: usize,
        /// Stored-set size; the matrix is (m-w) x m.
        #[arg(long)]
        w: usize,
        /// Matrix seed in hex.
        #[arg(long, value_parser = parse_hex)]
        alpha: u64,
        #[arg(long)]
        json: bool,
    },
    /// Try every seed and print the one leaving the most good tuples.
    Search {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        w: usize,
    },
    /// First write: the message file holds the slot permutation as one
    /// decimal factorial-base rank.
    Encode1 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        w: usize,
        #[arg(long, value_parser = parse_hex)]
        alpha: u64,
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        message: PathBuf,
    },
    /// Second write: one (m-w)-bit value line per good tuple.
    Encode2 {
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        message: PathBuf,
    },
    /// Print the permutation rank (round 1) or the values (round 2).
    Decode {
        #[arg(long)]
        image: PathBuf,
    },
}

#[derive(Subcommand)]
enum DefectCmd {
    /// Write a k-bit payload around the stuck cells of a k+b cell word.
    Write {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        b: usize,
        /// File of index=bit lines fixing the stuck cells.
        #[arg(long)]
        stuck: PathBuf,
        #[arg(long)]
        payload: PathBuf,
        #[arg(long)]
        image: PathBuf,
    },
    /// Print the payload back out of a written image.
    Read {
        #[arg(long)]
        image: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Basic,
    I,
    Ii,
    Iii,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Basic => Variant::Basic,
            VariantArg::I => Variant::ImpI,
            VariantArg::Ii => Variant::ImpII,
            VariantArg::Iii => Variant::ImpIII,
        }
    }
}

fn parse_wom2_params(s: &str) -> Result<Wom2Params, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err("expected k,b,t,g,smax".into());
    }
    let nums: Vec<usize> = parts
        .iter()
        .map(|p| p.parse().map_err(|_| format!("bad number {p:?}")))
        .collect::<Result<_, _>>()?;
    let woz = WozParams::new(nums[0], nums[1]).map_err(|e| e.to_string())?;
    Wom2Params::new(woz, nums[2], nums[3], nums[4]).map_err(|e| e.to_string())
}

fn parse_chunk(s: &str) -> Result<WozParams, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err("expected k,b".into());
    }
    let k = parts[0].parse().map_err(|_| format!("bad number {:?}", parts[0]))?;
    let b = parts[1].parse().map_err(|_| format!("bad number {:?}", parts[1]))?;
    WozParams::new(k, b).map_err(|e| e.to_string())
}

fn parse_hex(s: &str) -> Result<u64, String> {
    let t = s.trim().trim_start_matches("0x");
    u64::from_str_radix(t, 16).map_err(|_| format!("bad hex value {s:?}"))
}

enum CliError {
    Core(Error),
    File(PathBuf, FormatError),
    Message(MessageError),
    Io(PathBuf, std::io::Error),
    Check,
}

impl CliError {
    /// 2 for bad inputs, 3 when no matrix or solution exists, 4 for
    /// unreadable or malformed files.
    fn code(&self) -> u8 {
        match self {
            CliError::Core(Error::NoGoodMatrix | Error::NoSolution) => 3,
            CliError::Core(_) | CliError::Message(_) | CliError::Check => 2,
            CliError::File(..) | CliError::Io(..) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::File(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Message(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Check => write!(f, "verification failed"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<MessageError> for CliError {
    fn from(e: MessageError) -> Self {
        CliError::Message(e)
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

/// Writes to stdout, treating a closed pipe as a polite request to stop.
fn emit(text: &str) -> Result<(), CliError> {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(CliError::Io(PathBuf::from("(stdout)"), e)),
    }
}

fn emit_line(text: impl fmt::Display) -> Result<(), CliError> {
    emit(&format!("{text}\n"))
}

fn load_image(path: &Path) -> Result<MemoryImage, CliError> {
    format::load_file(path).map_err(|e| CliError::File(path.to_path_buf(), e))
}

fn save_image(path: &Path, img: &MemoryImage) -> Result<(), CliError> {
    format::save_file(path, img).map_err(|e| CliError::File(path.to_path_buf(), e))
}

fn value_text(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn report_text(
    report: &RateReport,
    extras: &[(&'static str, serde_json::Value)],
    json: bool,
) -> String {
    use std::fmt::Write;
    let mut fields: Vec<(&'static str, serde_json::Value)> =
        vec![("scheme", report.scheme.to_string().into())];
    fields.extend(extras.iter().cloned());
    fields.push(("cells", report.cells.into()));
    fields.push(("round_bits", report.round_bits.clone().into()));
    fields.push(("rate", report.rate.into()));
    fields.push(("reference", report.reference.into()));
    fields.push(("gap", report.gap.into()));
    if json {
        let map: serde_json::Map<String, serde_json::Value> =
            fields.iter().map(|(k, v)| ((*k).to_string(), v.clone())).collect();
        let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(map))
            .expect("report fields serialize");
        text.push('\n');
        text
    } else {
        let mut out = String::new();
        for (key, v) in &fields {
            match v {
                serde_json::Value::Array(xs) => {
                    let parts: Vec<String> = xs.iter().map(value_text).collect();
                    writeln!(out, "{key}: {}", parts.join(" ")).unwrap();
                }
                v => writeln!(out, "{key}: {}", value_text(v)).unwrap(),
            }
        }
        out
    }
}

fn curve_points(
    end: f64,
    step: f64,
    f: impl Fn(f64) -> f64,
) -> Result<Vec<(f64, f64)>, CliError> {
    if !(1e-6..=end).contains(&step) {
        return Err(CliError::Core(Error::Invalid(
            "curve step must be between 1e-6 and the curve range",
        )));
    }
    let mut pts = Vec::new();
    let mut i = 0u32;
    loop {
        let p = f64::from(i) * step;
        if p > end + 1e-12 {
            break;
        }
        pts.push((p, f(p)));
        i += 1;
    }
    if pts.last().is_none_or(|&(p, _)| p < end - 1e-12) {
        pts.push((end, f(end)));
    }
    Ok(pts)
}

fn curve_text(p: f64, value: f64, curve: &[(f64, f64)], json: bool) -> String {
    use std::fmt::Write;
    if json {
        let pts: Vec<_> = curve.iter().map(|&(p, v)| json!({"p": p, "value": v})).collect();
        let doc = json!({ "optimum": { "p": p, "value": value }, "curve": pts });
        let mut text = serde_json::to_string_pretty(&doc).expect("curve serializes");
        text.push('\n');
        text
    } else {
        let mut out = String::new();
        writeln!(out, "# optimum p={p} value={value}").unwrap();
        writeln!(out, "p,value").unwrap();
        for (p, v) in curve {
            writeln!(out, "{p},{v}").unwrap();
        }
        out
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn bad_count(p: &WozParams, s: &IndexSet) -> Result<u64, CliError> {
    let mut bad = 0;
    for alpha in FieldElement::all(p.k())? {
        if !is_good(p, alpha, s)? {
            bad += 1;
        }
    }
    Ok(bad)
}

fn verify_ensemble(k: usize, b: usize) -> Result<(), CliError> {
    use std::fmt::Write;
    if k > 8 {
        return Err(CliError::Core(Error::Invalid(
            "exhaustive verification requires k of at most 8",
        )));
    }
    let p = WozParams::new(k, b)?;
    let n = p.word_len();
    let mut out = String::new();
    let mut failed = false;

    let mut ok = true;
    for word in 0..(1u64 << n) {
        let y = BitVector::from_u64(n, word);
        let count = count_spanning(&p, &y)?;
        let expect = if word == 0 {
            1u64 << k
        } else if y.slice(0..k).is_zero() {
            0
        } else {
            1u64 << (k - b)
        };
        if count != expect {
            ok = false;
        }
    }
    failed |= !ok;
    writeln!(
        out,
        "membership: each of the {} words lies in 2^(k-b) = {} row spaces when its first k bits \
         are nonzero, else in none: {}",
        1u64 << n,
        1u64 << (k - b),
        verdict(ok)
    )
    .unwrap();

    let mut ok = true;
    let mut worst = 0u64;
    for word in 1..(1u64 << n) {
        let y = BitVector::from_u64(n, word);
        let s = IndexSet::from_support(&y);
        let bound = ((1u64 << s.len()) - 1) << (k - b);
        let bad = bad_count(&p, &s)?;
        worst = worst.max(bad);
        if bad > bound {
            ok = false;
        }
    }
    failed |= !ok;
    writeln!(
        out,
        "domination: every weight-s word has at most (2^s - 1) * 2^(k-b) matrices covering a \
         nonzero subword (worst count {worst}): {}",
        verdict(ok)
    )
    .unwrap();

    let mut ok = true;
    let mut checked = 0u64;
    let mut worst = 0u64;
    for size in 0..=b {
        for rank in 0..binomial(n, size) {
            let s = subset_unrank(rank, n, size)?;
            let bad = bad_count(&p, &s)?;
            let bound = ((1u64 << size) - 1) << (k - b);
            if bad > bound || bad >= (1u64 << k) {
                ok = false;
            }
            if find_good_matrix(&p, std::slice::from_ref(&s)).is_err() {
                ok = false;
            }
            checked += 1;
            worst = worst.max(bad);
        }
    }
    failed |= !ok;
    writeln!(
        out,
        "writable sets: all {checked} sets of size at most b leave a good matrix (worst {worst} \
         bad of {}): {}",
        1u64 << k,
        verdict(ok)
    )
    .unwrap();

    let mut sets_by_rank: Vec<IndexSet> = Vec::new();
    for size in 1..=b {
        for rank in 0..binomial(n, size) {
            sets_by_rank.push(subset_unrank(rank, n, size)?);
        }
    }
    let mut ok = true;
    let mut families = 0u64;
    let stride = sets_by_rank.len().div_ceil(64).max(1);
    for start in (0..sets_by_rank.len()).step_by(stride) {
        let mut family = Vec::new();
        let mut cost = 0u64;
        for s in sets_by_rank.iter().cycle().skip(start) {
            let c = (1u64 << s.len()) - 1;
            if cost + c >= (1u64 << b) {
                break;
            }
            cost += c;
            family.push(s.clone());
        }
        if family.is_empty() {
            continue;
        }
        if !guarantee_holds(&p, &family)? || find_good_matrix(&p, &family).is_err() {
            ok = false;
        }
        families += 1;
    }
    failed |= !ok;
    writeln!(
        out,
        "guarantee: {families} set families within the union budget all found a shared matrix: {}",
        verdict(ok)
    )
    .unwrap();

    let mut seen = HashSet::new();
    for alpha in FieldElement::all(k)? {
        let m = ensemble_matrix(&p, alpha)?;
        let rows: Vec<u64> = (0..k).map(|r| m.row(r).to_u64()).collect();
        seen.insert(rows);
    }
    let ok = seen.len() == 1usize << k;
    failed |= !ok;
    writeln!(out, "distinct: the {} matrices are pairwise distinct: {}", 1u64 << k, verdict(ok))
        .unwrap();

    emit(&out)?;
    if failed {
        Err(CliError::Check)
    } else {
        Ok(())
    }
}

fn code_of(img: &MemoryImage) -> Result<LookupFreeCode, CliError> {
    match img.params() {
        SchemeParams::LookupFree { m, w, seed } => {
            Ok(LookupFreeCode::from_seed(*m, *w, *seed)?)
        }
        _ => Err(CliError::Core(Error::Scheme {
            expected: Scheme::LookupFree,
            found: img.scheme(),
        })),
    }
}

fn lookupfree_text(code: &LookupFreeCode, json: bool) -> String {
    let extras = [
        ("alpha", format!("{:#x}", code.seed().expect("built from a seed")).into()),
        ("sigma", (code.sigma() as u64).into()),
        ("sigma_g", (code.sigma_g() as u64).into()),
    ];
    report_text(&code.rate(), &extras, json)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::FieldTable => {
            let mut out = String::new();
            for k in 1..=MAX_K {
                let poly = irreducible_poly(k)?;
                let line: Vec<&str> =
                    (0..poly.len()).map(|i| if poly.get(i) { "1" } else { "0" }).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
            emit(&out)
        }
        Cmd::VerifyEnsemble { k, b } => verify_ensemble(k, b),
        Cmd::Analyze(cmd) => match cmd {
            AnalyzeCmd::Capacity { step, json } => {
                let (p, value) = rate::maximize_capacity2();
                let curve = curve_points(0.5, step, rate::capacity2_curve)?;
                emit(&curve_text(p, value, &curve, json))
            }
            AnalyzeCmd::EqualRate { step, json } => {
                let (p, value) = rate::equal_rate_point();
                let curve = curve_points(0.5, step, |p| rate::entropy(p) - (1.0 - p))?;
                emit(&curve_text(p, value, &curve, json))
            }
            AnalyzeCmd::Rate3 { variant, step, json } => {
                let v = Variant::from(variant);
                let (p, value) = rate::maximize_rate3(v);
                let curve = curve_points(1.0, step, |p| rate::rate3(v, p))?;
                emit(&curve_text(p, value, &curve, json))
            }
        },
        Cmd::Rs(cmd) => match cmd {
            RsCmd::Encode1 { symbol, image } => {
                let img = rivest_shamir::write1(Symbol::new(symbol)?)?;
                save_image(&image, &img)
            }
            RsCmd::Encode2 { symbol, image } => {
                let mut img = load_image(&image)?;
                rivest_shamir::write2(&mut img, Symbol::new(symbol)?)?;
                save_image(&image, &img)
            }
            RsCmd::Decode { image } => {
                let img = load_image(&image)?;
                emit_line(rivest_shamir::read(&img)?.value())
            }
        },
        Cmd::Wom2(cmd) => match cmd {
            Wom2Cmd::Encode1 { params, image, message } => {
                let ranks = messages::parse_rank_lines(&read_text(&message)?)?;
                if ranks.len() != params.blocks() {
                    return Err(CliError::Message(MessageError::new(format!(
                        "message has {} set lines, the image has {} blocks",
                        ranks.len(),
                        params.blocks()
                    ))));
                }
                let universe = params.woz().word_len();
                let sets = ranks
                    .iter()
                    .map(|&r| messages::set_unrank(r, universe, params.smax()))
                    .collect::<Result<Vec<_>, _>>()?;
                let img = wom2::encode1(&params, &sets)?;
                save_image(&image, &img)
            }
            Wom2Cmd::Encode2 { image, message } => {
                let mut img = load_image(&image)?;
                let payload = messages::parse_bits(&read_text(&message)?)?;
                wom2::encode2(&mut img, &payload)?;
                save_image(&image, &img)
            }
            Wom2Cmd::Decode { image } => {
                let img = load_image(&image)?;
                if img.round() == 2 {
                    emit_line(messages::format_bits(&wom2::decode2(&img)?))
                } else {
                    let lines: Vec<String> = wom2::decode1(&img)?
                        .iter()
                        .map(|s| messages::set_rank(s).to_string())
                        .collect();
                    emit(&(lines.join("\n") + "\n"))
                }
            }
            Wom2Cmd::Rate { params, json } => {
                let guaranteed = wom2::guaranteed(&params)?;
                emit(&report_text(&wom2::rate(&params), &[("guaranteed", guaranteed.into())], json))
            }
        },
        Cmd::Wom3(cmd) => match cmd {
            Wom3Cmd::Write1 { variant, m, z, chunk, image, message } => {
                let p = Wom3Params::new(m, z, variant.into(), chunk)?;
                let word = messages::parse_word(&read_text(&message)?)?;
                let img = wom3::write1(&p, &word)?;
                save_image(&image, &img)
            }
            Wom3Cmd::Write2 { image, message } => {
                let mut img = load_image(&image)?;
                let word = messages::parse_word(&read_text(&message)?)?;
                wom3::write2(&mut img, &word)?;
                save_image(&image, &img)
            }
            Wom3Cmd::Write3 { image, payload } => {
                let mut img = load_image(&image)?;
                let bits = messages::parse_bits(&read_text(&payload)?)?;
                wom3::write3(&mut img, &bits)?;
                save_image(&image, &img)
            }
            Wom3Cmd::Read { image } => {
                let img = load_image(&image)?;
                match img.round() {
                    2 => emit_line(messages::format_word(&wom3::read2(&img)?)),
                    3 => emit_line(messages::format_bits(&wom3::read3(&img)?)),
                    _ => emit_line(messages::format_word(&wom3::read1(&img)?)),
                }
            }
            Wom3Cmd::Capacity { image } => {
                let img = load_image(&image)?;
                emit_line(wom3::capacity3(&img)?)
            }
        },
        Cmd::Lookupfree(cmd) => match cmd {
            LookupfreeCmd::Build { m, w, alpha, json } => {
                let code = LookupFreeCode::from_seed(m, w, alpha)?;
                emit(&lookupfree_text(&code, json))
            }
            LookupfreeCmd::Search { m, w } => {
                let code = LookupFreeCode::search_seed(m, w)?;
                emit(&format!(
                    "alpha: {:#x}\nsigma: {}\nsigma_g: {}\n",
                    code.seed().expect("search always seeds"),
                    code.sigma(),
                    code.sigma_g()
                ))
            }
            LookupfreeCmd::Encode1 { m, w, alpha, image, message } => {
                let code = LookupFreeCode::from_seed(m, w, alpha)?;
                let rank = messages::parse_big_rank(&read_text(&message)?)?;
                let perm = perm_unrank(&rank, code.sigma())?;
                let img = lookupfree::encode1(&code, &perm)?;
                save_image(&image, &img)
            }
            LookupfreeCmd::Encode2 { image, message } => {
                let mut img = load_image(&image)?;
                let code = code_of(&img)?;
                let width = code.m() - code.w();
                let xs = messages::parse_bit_lines(&read_text(&message)?, width)?;
                lookupfree::encode2(&code, &mut img, &xs)?;
                save_image(&image, &img)
            }
            LookupfreeCmd::Decode { image } => {
                let img = load_image(&image)?;
                if img.round() == 2 {
                    let lines: Vec<String> =
                        lookupfree::decode2(&img)?.iter().map(messages::format_bits).collect();
                    emit(&(lines.join("\n") + "\n"))
                } else {
                    let perm = lookupfree::decode1(&img)?;
                    emit_line(perm_rank(&perm)?)
                }
            }
        },
        Cmd::Defect(cmd) => match cmd {
            DefectCmd::Write { k, b, stuck, payload, image } => {
                let p = WozParams::new(k, b)?;
                let d = messages::parse_stuck(&read_text(&stuck)?, p.word_len())?;
                let bits = messages::parse_bits(&read_text(&payload)?)?;
                let img = stuckat::write_image(&p, &d, &bits)?;
                save_image(&image, &img)
            }
            DefectCmd::Read { image } => {
                let img = load_image(&image)?;
                emit_line(messages::format_bits(&stuckat::read_image(&img)?))
            }
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
