use std::fmt::Write as _;

use eulerdecomp::classical::{alt_power_sum_closed, dickson, e_tilde, euler_number, euler_poly, Parity};
use eulerdecomp::decompose::{all_decompositions, complete_decompositions, try_decompose, MAX_DEGREE};
use eulerdecomp::diophantine::{
    brute_search, classify_all, examined_splits, family_case_i, family_case_ii, family_case_iii, family_case_iv,
    family_case_v, CaseTag, ExceptionalForm, SearchBox, SolutionFamily, Witness,
};
use eulerdecomp::poly::text::{parse_poly, to_coeff_list, to_human};
use eulerdecomp::recognize::{detect_dickson_form, detect_power_form, dickson_extrema};
use eulerdecomp::theorems::{self, TheoremOptions};
use eulerdecomp::{Error, Int, QPoly, Rat, Result};
use serde_json::{json, Value};

use crate::render;
use crate::{Command, DecomposeArgs, FamilyArgs, Report, SearchArgs, TheoremArgs};

fn done(text: String, json: Value) -> Result<Report> {
    Ok(Report { text, json, ok: true })
}

fn parse_rat(s: &str) -> Result<Rat> {
    s.trim().parse::<Rat>().map_err(|e| Error::Parse(format!("invalid rational '{s}': {e}")))
}

fn parse_int(s: &str) -> Result<Int> {
    s.trim().parse::<Int>().map_err(|e| Error::Parse(format!("invalid integer '{s}': {e}")))
}

fn guard_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeLimit { degree: n, limit: MAX_DEGREE });
    }
    Ok(())
}

fn poly_block(label: &str, p: &QPoly) -> String {
    format!("{label} = {}\ncoefficients: {}\n", to_human(p), to_coeff_list(p))
}

pub fn run(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Euler { k, number } => {
            guard_degree(*k)?;
            if *number {
                let e: Rat = euler_number(*k);
                return done(format!("E_{k} = {e}\n"), json!({ "k": k, "euler_number": render::rat(&e) }));
            }
            let p: QPoly = euler_poly(*k);
            done(poly_block(&format!("E_{k}(x)"), &p), json!({ "k": k, "poly": render::poly(&p) }))
        }
        Command::Etilde { m } => {
            guard_degree(2 * m)?;
            let p: QPoly = e_tilde(*m);
            done(poly_block(&format!("Ẽ_{m}(x)"), &p), json!({ "m": m, "poly": render::poly(&p) }))
        }
        Command::Dickson { m, a } => {
            guard_degree(*m)?;
            let a = parse_rat(a)?;
            let p = dickson(*m, &a);
            done(
                poly_block(&format!("D_{m}(x, {a})"), &p),
                json!({ "m": m, "a": render::rat(&a), "poly": render::poly(&p) }),
            )
        }
        Command::Sum { k, n } => {
            guard_degree(*k as usize)?;
            let n = parse_int(n)?;
            if n < Int::from(1) {
                return Err(Error::Precondition(format!("n must be at least 1, got {n}")));
            }
            let v = alt_power_sum_closed(*k, &n);
            done(format!("{v}\n"), json!({ "k": k, "n": render::int(&n), "value": render::rat(&v) }))
        }
        Command::Decompose(args) => decompose(args),
        Command::Detect { poly } => detect(poly),
        Command::DicksonExtrema { k, a } => {
            guard_degree(*k)?;
            let a = parse_rat(a)?;
            let reports = dickson_extrema(*k, &a)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for r in &reports {
                let kind: Vec<String> = r.kind.iter().map(|m| m.to_string()).collect();
                writeln!(text, "{}: type ({})", r.value, kind.join(", ")).unwrap();
                rows.push(json!({ "value": render::rat(&r.value), "type": r.kind }));
            }
            done(text, json!({ "k": k, "a": render::rat(&a), "extrema": rows }))
        }
        Command::Classify { k, g, all } => classify(*k, g, *all),
        Command::Family(args) => family(args),
        Command::Search(args) => search(args),
        Command::VerifyTheorems(args) => verify_theorems(args),
    }
}

fn decomposition_json(outer: &QPoly, inner: &QPoly, scale: &Rat) -> Value {
    json!({
        "inner_degree": inner.deg(),
        "outer": render::poly(outer),
        "inner": render::poly(inner),
        "scale": render::rat(scale),
    })
}

fn decompose(args: &DecomposeArgs) -> Result<Report> {
    let f: QPoly = parse_poly(&args.poly)?;
    if args.complete {
        let chains = complete_decompositions(&f)?;
        let mut text = String::new();
        for chain in &chains {
            let parts: Vec<String> = chain.iter().map(|p| format!("({})", to_human(p))).collect();
            writeln!(text, "{}", parts.join(" ∘ ")).unwrap();
        }
        let json_chains: Vec<Vec<Value>> = chains.iter().map(|c| c.iter().map(render::poly).collect()).collect();
        return done(text, json!({ "source": render::poly(&f), "chains": json_chains }));
    }
    let pairs = match args.k {
        Some(k) => try_decompose(&f, k)?.into_iter().collect::<Vec<_>>(),
        None => all_decompositions(&f)?.pairs,
    };
    let mut text = String::new();
    if pairs.is_empty() {
        match args.k {
            Some(k) => writeln!(text, "no decomposition with inner degree {k}").unwrap(),
            None => writeln!(text, "indecomposable").unwrap(),
        }
    }
    for d in &pairs {
        writeln!(
            text,
            "inner degree {}: scale = {}, outer = {}, inner = {}",
            d.inner_degree(),
            d.scale,
            to_human(&d.outer),
            to_human(&d.inner)
        )
        .unwrap();
    }
    let rows: Vec<Value> = pairs.iter().map(|d| decomposition_json(&d.outer, &d.inner, &d.scale)).collect();
    done(text, json!({ "source": render::poly(&f), "decompositions": rows }))
}

fn detect(poly: &str) -> Result<Report> {
    let p: QPoly = parse_poly(poly)?;
    guard_degree(p.deg().unwrap_or(0))?;
    let power = detect_power_form(&p);
    let dick = detect_dickson_form(&p);
    let mut text = String::new();
    match &power {
        Some(f) => {
            let base = to_human(&QPoly::new(vec![f.shift.clone(), Rat::from_integer(1.into())]));
            writeln!(text, "power form: {} * ({base})^{} + {}", f.u, f.degree, f.v).unwrap()
        }
        None => writeln!(text, "power form: none").unwrap(),
    }
    match &dick {
        Some(f) => writeln!(
            text,
            "dickson form: {} * D_{}({}, {}) + {}",
            f.u,
            f.degree,
            render::linear_text(&f.inner),
            f.a,
            f.v
        )
        .unwrap(),
        None => writeln!(text, "dickson form: none").unwrap(),
    }
    let power_json = power.map_or(Value::Null, |f| {
        json!({ "u": render::rat(&f.u), "v": render::rat(&f.v), "shift": render::rat(&f.shift), "degree": f.degree })
    });
    let dickson_json = dick.map_or(Value::Null, |f| {
        json!({
            "u": render::rat(&f.u),
            "v": render::rat(&f.v),
            "a": render::rat(&f.a),
            "inner": render::linear(&f.inner),
            "degree": f.degree,
        })
    });
    done(text, json!({ "poly": render::poly(&p), "power": power_json, "dickson": dickson_json }))
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::I { p } | Witness::II { p } => json!({ "p": render::poly(p) }),
        Witness::III { delta, p } => json!({ "delta": render::linear(delta), "p": render::poly(p) }),
        Witness::IV { gamma, delta, t } => {
            json!({ "gamma": render::rat(gamma), "delta": render::linear(delta), "t": t })
        }
        Witness::V { a, b, delta, p } => json!({
            "a": render::rat(a),
            "b": render::rat(b),
            "delta": render::linear(delta),
            "p": render::poly(p),
        }),
    }
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::I { p } | Witness::II { p } => format!("p = {}", to_human(p)),
        Witness::III { delta, p } => format!("delta = {}, p = {}", render::linear_text(delta), to_human(p)),
        Witness::IV { gamma, delta, t } => {
            format!("gamma = {gamma}, delta = {}, t = {t}", render::linear_text(delta))
        }
        Witness::V { a, b, delta, p } => {
            format!("a = {a}, b = {b}, delta = {}, p = {}", render::linear_text(delta), to_human(p))
        }
    }
}

fn form_json(form: &ExceptionalForm) -> Value {
    json!({
        "case": form.case_tag().name(),
        "k": form.k,
        "s": form.s(),
        "sign": form.sign.name(),
        "f": render::linear(&form.f),
        "witness": witness_json(&form.witness),
        "argument": render::poly(&form.inner_argument()),
    })
}

fn classify(k: u32, g: &str, all: bool) -> Result<Report> {
    let g: QPoly = parse_poly(g)?;
    guard_degree(g.deg().unwrap_or(0))?;
    let mut forms = classify_all(k, &g)?;
    if !all {
        forms.truncate(1);
    }
    let splits = examined_splits(k, &g)?;
    let mut text = String::new();
    if forms.is_empty() {
        let seen: Vec<String> = splits.iter().map(|(o, d)| format!("{o} with inner degree {d}")).collect();
        let seen = if seen.is_empty() { "none possible by degree".to_string() } else { seen.join(", ") };
        writeln!(text, "no exceptional shape found at any split (examined: {seen})").unwrap();
    }
    for form in &forms {
        let outer = match form.s() {
            Some(s) => format!("Ẽ_{s}"),
            None => format!("E_{k}"),
        };
        writeln!(
            text,
            "case {}: g = f({outer}(R)) with f = {}, {} (R = {})",
            form.case_tag(),
            render::linear_text(&form.f),
            witness_text(&form.witness),
            to_human(&form.inner_argument())
        )
        .unwrap();
    }
    let splits_json: Vec<Value> = splits.iter().map(|(o, d)| json!({ "outer": o, "inner_degree": d })).collect();
    let forms_json: Vec<Value> = forms.iter().map(form_json).collect();
    done(text, json!({ "k": k, "g": render::poly(&g), "forms": forms_json, "splits": splits_json }))
}

fn build_family(args: &FamilyArgs) -> Result<SolutionFamily> {
    let tag = CaseTag::parse(&args.case)?;
    let branch = Parity::parse(&args.branch)?;
    let r: QPoly = match &args.r {
        Some(s) => parse_poly(s)?,
        None => match tag {
            CaseTag::I | CaseTag::II => QPoly::x(),
            _ => QPoly::one(),
        },
    };
    match tag {
        CaseTag::I => family_case_i(args.k, &r, branch),
        CaseTag::II => family_case_ii(args.k, &r, branch),
        CaseTag::III => family_case_iii(args.k, &r, branch),
        CaseTag::IV => family_case_iv(args.k, args.t, branch),
        CaseTag::V => family_case_v(args.k, &r, branch),
    }
}

fn family(args: &FamilyArgs) -> Result<Report> {
    guard_degree(args.k as usize)?;
    let fam = build_family(args)?;
    let g = fam.g().clone();
    let mut text = format!("g = {}\n", to_human(&g));
    let mut points = Vec::new();
    let mut failure = None;
    for point in fam.take(args.count) {
        match point {
            Ok(p) => {
                writeln!(text, "({}, {})  summands = {}", p.x, p.y, p.terms).unwrap();
                points.push(json!({
                    "index": p.index,
                    "x": render::int(&p.x),
                    "y": render::int(&p.y),
                    "terms": render::int(&p.terms),
                }));
            }
            Err(e) => {
                writeln!(text, "error: {e}").unwrap();
                failure = Some(e.to_string());
            }
        }
    }
    let json = json!({
        "case": args.case.to_ascii_lowercase(),
        "k": args.k,
        "branch": Parity::parse(&args.branch)?.name(),
        "g": render::poly(&g),
        "points": points,
        "error": failure,
    });
    Ok(Report { text, json, ok: failure.is_none() })
}

fn search(args: &SearchArgs) -> Result<Report> {
    guard_degree(args.k as usize)?;
    let g: QPoly = parse_poly(&args.g)?;
    if args.x_max == 0 || args.y_min > args.y_max {
        return Err(Error::Precondition("search box must be nonempty (x-max >= 1, y-min <= y-max)".into()));
    }
    let bounds = SearchBox { x_max: args.x_max, y_min: args.y_min, y_max: args.y_max };
    let found = brute_search(args.k, &g, bounds);
    let mut text = String::new();
    for (x, y) in &found {
        writeln!(text, "({x}, {y})").unwrap();
    }
    if found.is_empty() {
        writeln!(text, "no solutions in the box").unwrap();
    }
    let rows: Vec<Value> = found.iter().map(|(x, y)| json!({ "x": x.to_string(), "y": y.to_string() })).collect();
    done(
        text,
        json!({
            "k": args.k,
            "g": render::poly(&g),
            "box": { "x_max": args.x_max.to_string(), "y_min": args.y_min.to_string(), "y_max": args.y_max.to_string() },
            "solutions": rows,
        }),
    )
}

fn verify_theorems(args: &TheoremArgs) -> Result<Report> {
    let opts = TheoremOptions {
        euler_max: args.euler_max,
        rak_max: args.rak_max,
        dickson_max: args.dickson_max,
        factor_max: args.factor_max,
        seed: args.seed,
        samples: args.samples,
    };
    let rows = theorems::run(&opts)?;
    let mut text = String::new();
    for r in &rows {
        let status = if r.passed { "PASS" } else { "FAIL" };
        writeln!(text, "{:<26} {:>4}  {status}  {}", r.check.name(), r.index, r.detail).unwrap();
    }
    let failed = rows.iter().filter(|r| !r.passed).count();
    writeln!(text, "{} checks, {failed} failed", rows.len()).unwrap();
    let rows_json: Vec<Value> = rows
        .iter()
        .map(|r| json!({ "check": r.check.name(), "index": r.index, "passed": r.passed, "detail": r.detail }))
        .collect();
    let json = json!({ "seed": args.seed.to_string(), "rows": rows_json, "failed": failed });
    Ok(Report { text, json, ok: failed == 0 })
}
