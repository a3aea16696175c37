use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use knot_mosaic::enumeration::{count, enumerate};
use knot_mosaic::equivalence::{KnotTypes, Verdict};
use knot_mosaic::moves::{DeterministicMove, MoveTable, PatternPair};
use knot_mosaic::oriented::OrientedMosaic;
use knot_mosaic::quantum::{
    Hamiltonian, KnotBasis, Observable, QuantumKnotState, QuantumKnotSystem, UnitaryMove, DEFAULT_SEED,
};
use knot_mosaic::{Error, Limits, Location, Mosaic};
use serde_json::{json, Value};

use crate::{render, Cli, Command, Format};

pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { code: 0, text, json }
    }
}

#[derive(Debug)]
pub enum Failure {
    Lib(Error),
    Usage(String),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Lib(e) if e.is_cap() => 3,
            Failure::Lib(
                Error::Parse { .. }
                | Error::OutOfRange { .. }
                | Error::SizeMismatch { .. }
                | Error::MoveTable { .. }
                | Error::Io(_),
            ) => 2,
            Failure::Lib(_) => 1,
        }
    }
}

type Result<T> = std::result::Result<T, Failure>;

struct Context {
    limits: Limits,
    table: MoveTable,
}

impl Context {
    fn knot_types(&self) -> KnotTypes {
        let types = KnotTypes::new(self.table.clone(), self.limits);
        match std::env::var_os("MOSAIC_CACHE_DIR") {
            Some(dir) if !dir.is_empty() => types.with_cache_dir(dir),
            _ => types,
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let limits = if cli.extended { Limits::EXTENDED } else { Limits::DEFAULT };
    let table = match &cli.move_table {
        Some(path) => MoveTable::from_file(path)?,
        None => MoveTable::standard(),
    };
    let ctx = Context { limits, table };
    match cli.command {
        Command::Validate { mosaic, oriented } => validate(&mosaic, oriented),
        Command::Render { mosaic } => {
            let m = read_mosaic(&mosaic)?;
            let picture = render::render(&m);
            Ok(Outcome::ok(
                picture.clone(),
                json!({ "schema": 1, "command": "render", "mosaic": m.to_tcode(), "picture": picture }),
            ))
        }
        Command::Enumerate { n, format } => {
            let all = enumerate(n, &ctx.limits)?;
            let codes: Vec<String> = all.iter().map(Mosaic::to_tcode).collect();
            let doc = json!({ "schema": 1, "command": "enumerate", "n": n, "count": codes.len(), "mosaics": codes });
            let text = match format {
                Format::Tcode => codes.iter().map(|c| format!("{c}\n")).collect(),
                Format::Json => format!("{doc}\n"),
            };
            Ok(Outcome::ok(text, doc))
        }
        Command::Count { n } => {
            let c = count(n)?;
            Ok(Outcome::ok(
                format!("{c}\n"),
                json!({ "schema": 1, "command": "count", "n": n, "count": c.to_string() }),
            ))
        }
        Command::Orbits { n } => orbits(&ctx, n),
        Command::Equiv { a, b, max_pad } => equiv(&ctx, &a, &b, max_pad),
        Command::MosaicNumber { mosaic, bound } => {
            let m = read_mosaic(&mosaic)?;
            let found = ctx.knot_types().mosaic_number(&m, bound)?;
            let json = json!({ "schema": 1, "command": "mosaic-number", "mosaic": m.to_tcode(), "bound": bound, "mosaic_number": found });
            Ok(match found {
                Some(k) => Outcome::ok(format!("{k}\n"), json),
                None => Outcome { code: 3, text: format!("undetermined up to {bound}\n"), json },
            })
        }
        Command::Evolve { state, mv, t } => evolve(&ctx, &state, &mv, t),
        Command::Measure { state, obs, shots, seed } => measure(&ctx, &state, &obs, shots, seed),
        Command::InvariantCheck { obs, n } => invariant_check(&ctx, &obs, n),
        Command::Average { obs, n, cap } => average(&ctx, &obs, n, cap),
    }
}

/// A t-code given literally or as the path of a file holding one.
fn read_arg(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        Ok(fs::read_to_string(path).map_err(Error::from)?.trim().to_string())
    } else {
        Ok(arg.trim().to_string())
    }
}

fn read_mosaic(arg: &str) -> Result<Mosaic> {
    Ok(Mosaic::parse_tcode(&read_arg(arg)?)?)
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn validate(arg: &str, oriented: bool) -> Result<Outcome> {
    let code = read_arg(arg)?;
    if oriented {
        let m = OrientedMosaic::parse_tcode(&code)?;
        let valid = m.is_oriented_knot_mosaic();
        let json =
            json!({ "schema": 1, "command": "validate", "mosaic": m.to_tcode(), "oriented": true, "valid": valid });
        let text = if valid { "valid oriented knot mosaic\n" } else { "not an oriented knot mosaic\n" };
        return Ok(Outcome { code: if valid { 0 } else { 1 }, text: text.into(), json });
    }
    let m = Mosaic::parse_tcode(&code)?;
    if !m.is_knot_mosaic() {
        let json =
            json!({ "schema": 1, "command": "validate", "mosaic": m.to_tcode(), "oriented": false, "valid": false });
        return Ok(Outcome { code: 1, text: "not a knot mosaic\n".into(), json });
    }
    let trace = m.trace()?;
    let text = format!(
        "valid knot {}-mosaic: {} component{}, {} crossing{}\n",
        m.n(),
        trace.components,
        if trace.components == 1 { "" } else { "s" },
        trace.crossings,
        if trace.crossings == 1 { "" } else { "s" },
    );
    let json = json!({
        "schema": 1, "command": "validate", "mosaic": m.to_tcode(), "oriented": false, "valid": true,
        "components": trace.components, "crossings": trace.crossings,
    });
    Ok(Outcome::ok(text, json))
}

fn orbits(ctx: &Context, n: usize) -> Result<Outcome> {
    let p = ctx.knot_types().partition(n)?;
    let mut text = String::new();
    let mut list = Vec::new();
    for (id, orbit) in p.orbits().iter().enumerate() {
        let codes: Vec<String> = orbit.iter().map(|&i| p.mosaic(i as usize).to_tcode()).collect();
        writeln!(text, "{id}: {}", codes.join(" ")).unwrap();
        list.push(json!({ "id": id, "size": codes.len(), "mosaics": codes }));
    }
    Ok(Outcome::ok(
        text,
        json!({ "schema": 1, "command": "orbits", "n": n, "orbit_count": list.len(), "orbits": list }),
    ))
}

fn equiv(ctx: &Context, a: &str, b: &str, max_pad: usize) -> Result<Outcome> {
    let (ma, mb) = (read_mosaic(a)?, read_mosaic(b)?);
    let verdict = ctx.knot_types().same_knot_type(&ma, &mb, max_pad)?;
    let base = json!({ "schema": 1, "command": "equiv", "a": ma.to_tcode(), "b": mb.to_tcode(), "max_pad": max_pad });
    let with = |mut doc: Value, extra: Value| {
        doc.as_object_mut().unwrap().extend(extra.as_object().unwrap().clone());
        doc
    };
    Ok(match verdict {
        Verdict::Equivalent { padding } => Outcome::ok(
            format!("equivalent (padding {padding})\n"),
            with(base, json!({ "verdict": "equivalent", "padding": padding })),
        ),
        Verdict::NotEquivalentUpTo { max_pad } => Outcome {
            code: 1,
            text: format!("not equivalent up to padding {max_pad}\n"),
            json: with(base, json!({ "verdict": "not-equivalent", "checked_padding": max_pad })),
        },
        Verdict::Unknown => Outcome {
            code: 3,
            text: "unknown: size cap reached before any comparison\n".into(),
            json: with(base, json!({ "verdict": "unknown" })),
        },
    })
}

/// `n` of the first mosaic named in a state or observable file.
fn file_n(text: &str, column: usize) -> Result<usize> {
    for (line_no, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let code = body
            .split_whitespace()
            .nth(column)
            .ok_or_else(|| Failure::Usage(format!("line {}: missing t-code", line_no + 1)))?;
        return Ok(Mosaic::parse_tcode(code)?.n());
    }
    Err(Failure::Usage("file has no entries".into()))
}

fn load_state(ctx: &Context, path: &Path) -> Result<(KnotBasis, QuantumKnotState)> {
    let text = read_file(path)?;
    let n = file_n(&text, 2)?;
    let basis = KnotBasis::new(n, &ctx.limits)?;
    let (psi, norm) = QuantumKnotState::parse(&text, &basis)?;
    if (norm - 1.0).abs() > 1e-12 {
        eprintln!("note: state normalized (input norm {norm})");
    }
    Ok((basis, psi))
}

fn state_json(psi: &QuantumKnotState, basis: &KnotBasis) -> Value {
    let terms: Vec<Value> =
        psi.terms().map(|(i, c)| json!({ "re": c.re, "im": c.im, "mosaic": basis.mosaic(i).to_tcode() })).collect();
    Value::Array(terms)
}

fn parse_location(text: &str) -> Result<Location> {
    let bad = || Failure::Usage(format!("bad location '{text}', expected i,j"));
    let (i, j) = text.split_once(',').ok_or_else(bad)?;
    Ok(Location::new(i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
}

fn parse_move(ctx: &Context, spec: &str, basis: &KnotBasis) -> Result<UnitaryMove> {
    if spec == "mirror" {
        return Ok(UnitaryMove::mirror(basis)?);
    }
    let (name, at) = spec
        .split_once('@')
        .ok_or_else(|| Failure::Usage(format!("bad move '{spec}', expected NAME@i,j or mirror")))?;
    let loc = parse_location(at)?;
    let n = basis.n();
    match name {
        "tunnel" => return Ok(UnitaryMove::tunneling(basis, loc.i, loc.j)?),
        "hyperbolic" => return Ok(UnitaryMove::hyperbolic(basis, loc.i, loc.j)?),
        "elliptic" => return Ok(UnitaryMove::elliptic(basis, loc.i, loc.j)?),
        _ => {}
    }
    let pair = if let Some((a, b)) = name.split_once('/') {
        PatternPair::new(Mosaic::parse_tcode(a)?, Mosaic::parse_tcode(b)?)
            .ok_or_else(|| Failure::Usage("the two patterns of a move must differ".into()))?
    } else {
        let (template, variant) = match name.split_once('#') {
            Some((t, v)) => (t, v.parse::<usize>().map_err(|_| Failure::Usage(format!("bad variant '{v}'")))?),
            None => (name, 0),
        };
        let tpl = ctx.table.template(template).ok_or_else(|| Failure::Usage(format!("unknown move '{template}'")))?;
        let patterns = tpl.expand_patterns();
        let count = patterns.len();
        patterns
            .into_iter()
            .nth(variant)
            .ok_or_else(|| Failure::Usage(format!("{template} has {count} variants, no #{variant}")))?
    };
    Ok(UnitaryMove::from_move(&DeterministicMove::new(n, loc, pair)?, basis)?)
}

fn evolve(ctx: &Context, state: &Path, spec: &str, t: f64) -> Result<Outcome> {
    let (basis, psi) = load_state(ctx, state)?;
    let g = parse_move(ctx, spec, &basis)?;
    let out = Hamiltonian::new(&g).evolve(&psi, t)?;
    let json = json!({ "schema": 1, "command": "evolve", "move": spec, "t": t, "n": basis.n(), "state": state_json(&out, &basis) });
    Ok(Outcome::ok(out.to_text(&basis), json))
}

fn measure(ctx: &Context, state: &Path, obs: &Path, shots: Option<u64>, seed: Option<u64>) -> Result<Outcome> {
    let (basis, psi) = load_state(ctx, state)?;
    let omega = Observable::parse(&read_file(obs)?, &basis)?;
    let dist = omega.measure(&psi)?;
    let mut text = String::new();
    let json = match shots {
        None => {
            let mut list = Vec::new();
            for &(l, p) in dist.outcomes() {
                writeln!(text, "{l} {p}").unwrap();
                list.push(json!({ "eigenvalue": l, "probability": p }));
            }
            json!({ "schema": 1, "command": "measure", "distribution": list })
        }
        Some(0) => return Err(Failure::Usage("--shots must be at least 1".into())),
        Some(shots) => {
            let seed = seed.unwrap_or(DEFAULT_SEED);
            let mut list = Vec::new();
            for (l, k) in dist.sample(shots, seed) {
                writeln!(text, "{l} {k}").unwrap();
                list.push(json!({ "eigenvalue": l, "count": k }));
            }
            json!({ "schema": 1, "command": "measure", "shots": shots, "seed": seed, "histogram": list })
        }
    };
    Ok(Outcome::ok(text, json))
}

fn load_system(ctx: &Context, obs: &Path, n: usize) -> Result<(QuantumKnotSystem, Observable)> {
    let system = QuantumKnotSystem::new(&ctx.knot_types(), n)?;
    let omega = Observable::parse(&read_file(obs)?, system.basis())?;
    Ok((system, omega))
}

fn invariant_check(ctx: &Context, obs: &Path, n: usize) -> Result<Outcome> {
    let (system, omega) = load_system(ctx, obs, n)?;
    let invariant = system.is_invariant(&omega)?;
    let exact = system.is_invariant_exact(&omega)?;
    let mut text = String::from(if invariant { "invariant\n" } else { "not invariant\n" });
    match exact {
        Some(e) => writeln!(text, "exact check: {}", if e { "commutes" } else { "does not commute" }).unwrap(),
        None => text.push_str("exact check: not applicable (entries are not exact ratios)\n"),
    }
    let json = json!({ "schema": 1, "command": "invariant-check", "n": n, "invariant": invariant, "exact": exact });
    Ok(Outcome { code: if invariant { 0 } else { 1 }, text, json })
}

fn average(ctx: &Context, obs: &Path, n: usize, cap: usize) -> Result<Outcome> {
    let (system, omega) = load_system(ctx, obs, n)?;
    let avg = system.group_average(&omega, cap)?;
    let text = format!("# closure size {}\n{}", avg.closure_size, avg.observable.to_text(system.basis()));
    let entries: Vec<Value> = avg
        .observable
        .entries()
        .iter()
        .filter(|((a, b), _)| a <= b)
        .map(|(&(a, b), v)| {
            let (ra, rb) = (system.basis().mosaic(a).to_tcode(), system.basis().mosaic(b).to_tcode());
            json!({ "re": v.re, "im": v.im, "row": ra, "col": rb })
        })
        .collect();
    let json =
        json!({ "schema": 1, "command": "average", "n": n, "closure_size": avg.closure_size, "entries": entries });
    Ok(Outcome::ok(text, json))
}
