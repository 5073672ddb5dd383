use std::fmt::Display;
use std::io::Read;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use linial_core::bond::{self, gamma_subposet, id_trees_on, IdForest};
use linial_core::chi::{available_routes, characteristic_polynomial, effective_modulus, partition_lattice, ChiFamily, Route};
use linial_core::dowling::{homogenized_subposet, LabeledPartition};
use linial_core::perm::{count_descent_class, count_table, enumerate, enumerate_labeled, genocchi, median_genocchi, Family, Permutation};
use linial_core::poset::{bounded_regions, poincare_polynomial, zaslavsky_regions};
use linial_core::series::{rhs_bbd, rhs_bd, rhs_char_series};
use linial_core::verify::{run_suite, Suite, SuiteOptions};
use linial_core::{FinitePoset, IntPolynomial, PolySeries, SetPartition};

use crate::output::{bound, csv, json, ok, param, CmdResult, Failure, Format, Output};
use crate::{ChiArgs, EnumerateArgs, FamilyArgs, Method, MobiusArgs, PsiArgs, SeriesArgs, SeriesKind, TableArgs, TableFamily, VerifyArgs};

fn strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

fn family(a: &FamilyArgs) -> Result<ChiFamily, Failure> {
    if a.n == 0 || a.m == 0 {
        return Err(param("n and m must be at least 1"));
    }
    Ok(a.family.parse()?)
}

/// Largest `n` handled without `--force`.
fn n_limit(f: ChiFamily) -> u32 {
    match f {
        ChiFamily::Braid => 7,
        ChiFamily::TypeA => 5,
        ChiFamily::TypeB | ChiFamily::Dowling => 3,
    }
}

pub fn table(a: &TableArgs, fmt: Format, force: bool) -> CmdResult {
    use TableFamily::*;
    let series = match (a.family, a.method) {
        (H | Rb, None | Some(Method::Series)) => true,
        (_, None | Some(Method::Enumeration)) => false,
        (_, Some(Method::Series)) => return Err(param("only h and rB have a series method")),
    };
    let limit = match (a.family, series) {
        (_, true) => 500,
        (G, _) => 8,
        (H | D | Dc | Descent, _) => 6,
        (Dm, _) => 5,
        (Rb, _) => 3,
    };
    bound("n", a.n, limit, force)?;
    if a.m == 0 {
        return Err(param("m must be at least 1"));
    }
    let from = a.from.unwrap_or(if a.family == H { 0 } else { 1 });
    let min = match a.family {
        G => 1,
        _ => 0,
    };
    if from < min || from > a.n {
        return Err(param(format!("range {from}..={} is empty or starts below {min}", a.n)));
    }
    let coeffs = match (a.family, series) {
        (H, true) => Some(rhs_bd(a.n as usize)),
        (Rb, true) => Some(rhs_bbd(a.n as usize)),
        _ => None,
    };
    let mut rows = Vec::new();
    for k in from..=a.n {
        let value = if let Some(s) = &coeffs {
            // Both series start at x^1; the empty case contributes 1.
            if k == 0 { BigInt::from(1) } else { s.coeff(k as usize).clone() }
        } else {
            match a.family {
                G => genocchi(k)?,
                H => median_genocchi(k),
                D => count_table(Family::Dperm, k, 1)?.count,
                Dc => count_table(Family::Dcycle, k, 1)?.count,
                Dm => count_table(Family::LabeledDperm, k, a.m)?.count,
                Descent => BigInt::from(count_descent_class(k)),
                Rb if k == 0 => BigInt::from(1),
                Rb => zaslavsky_regions(&homogenized_subposet(k, 2)?.characteristic_polynomial()),
            }
        };
        rows.push((k, value));
    }
    match fmt {
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                n: u32,
                value: String,
            }
            let rows: Vec<Row> = rows.into_iter().map(|(n, v)| Row { n, value: v.to_string() }).collect();
            ok(json(&rows))
        }
        Format::Csv => ok(csv(&["n", "value"], rows.into_iter().map(|(n, v)| vec![n.to_string(), v.to_string()]))?),
    }
}

pub fn chi(a: &ChiArgs, fmt: Format, force: bool) -> CmdResult {
    let fam = family(&a.fam)?;
    bound("n", a.fam.n, n_limit(fam), force)?;
    let m = effective_modulus(fam, a.fam.m);
    let routes: Vec<Route> = if a.route == "all" {
        available_routes(fam, m)
    } else {
        vec![a.route.parse()?]
    };
    let mut results = Vec::new();
    for r in &routes {
        results.push((*r, characteristic_polynomial(fam, a.fam.n, m, *r)?));
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let first = &results[0].1;
    let text = match fmt {
        Format::Json => {
            let per_route: Vec<Value> = results
                .iter()
                .map(|(r, p)| json!({ "route": r.to_string(), "chi": strings(p) }))
                .collect();
            let mut v = json!({
                "family": fam.to_string(),
                "n": a.fam.n,
                "m": m,
                "chi": strings(first),
                "pretty": first.pretty("t"),
            });
            if routes.len() > 1 {
                v["routes"] = Value::Array(per_route);
                v["agree"] = Value::Bool(agree);
            } else {
                v["route"] = Value::String(routes[0].to_string());
            }
            json(&v)
        }
        Format::Csv => csv(
            &["route", "k", "coefficient"],
            results.iter().flat_map(|(r, p)| {
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(move |(k, c)| vec![r.to_string(), k.to_string(), c.to_string()])
            }),
        )?,
    };
    if !agree {
        eprintln!("error: routes disagree");
    }
    Ok(Output { text, pass: agree })
}

fn mobius_rows<K: Display + Ord + Clone + std::hash::Hash>(p: &FinitePoset<K>, pick: Option<usize>, all: bool) -> Result<Vec<(String, usize, BigInt)>, Failure> {
    let idx: Vec<usize> = if all {
        let mut v: Vec<usize> = (0..p.len()).collect();
        v.sort_by(|&x, &y| p.rank(x).cmp(&p.rank(y)).then_with(|| p.element(x).cmp(p.element(y))));
        v
    } else if let Some(i) = pick {
        vec![i]
    } else {
        vec![p.top().ok_or_else(|| param("poset has no top element"))?]
    };
    Ok(idx
        .into_iter()
        .map(|i| (p.element(i).to_string(), p.rank(i), p.mobius_from_bottom(i).clone()))
        .collect())
}

fn lookup<K: std::hash::Hash + Eq + Clone>(p: &FinitePoset<K>, k: &K) -> Result<usize, Failure> {
    p.index_of(k).ok_or_else(|| param("element is not in the lattice"))
}

pub fn mobius(a: &MobiusArgs, fmt: Format, force: bool) -> CmdResult {
    let fam = family(&a.fam)?;
    bound("n", a.fam.n, n_limit(fam), force)?;
    let m = effective_modulus(fam, a.fam.m);
    let n = a.fam.n;
    let rows = match fam {
        ChiFamily::Braid | ChiFamily::TypeA => {
            let p = if fam == ChiFamily::Braid { partition_lattice(n) } else { gamma_subposet(n) };
            let pick = match &a.element {
                Some(s) => Some(lookup(&p, &s.parse::<SetPartition>()?)?),
                None => None,
            };
            mobius_rows(&p, pick, a.all)?
        }
        ChiFamily::TypeB | ChiFamily::Dowling => {
            let p = homogenized_subposet(n, m)?;
            let pick = match &a.element {
                Some(s) => Some(lookup(&p, &LabeledPartition::parse(s, m)?)?),
                None => None,
            };
            mobius_rows(&p, pick, a.all)?
        }
    };
    match fmt {
        Format::Json => {
            let v: Vec<Value> = rows
                .into_iter()
                .map(|(e, r, mu)| json!({ "element": e, "rank": r, "mobius": mu.to_string() }))
                .collect();
            ok(json(&json!({ "family": fam.to_string(), "n": n, "m": m, "values": v })))
        }
        Format::Csv => ok(csv(
            &["element", "rank", "mobius"],
            rows.into_iter().map(|(e, r, mu)| vec![e, r.to_string(), mu.to_string()]),
        )?),
    }
}

pub fn regions(a: &FamilyArgs, fmt: Format, force: bool) -> CmdResult {
    let fam = family(a)?;
    bound("n", a.n, n_limit(fam), force)?;
    let m = effective_modulus(fam, a.m);
    let chi = characteristic_polynomial(fam, a.n, m, Route::PosetMobius)?;
    let rank = chi.degree().unwrap_or(0);
    let poincare = poincare_polynomial(&chi, rank)?;
    // Region counts only make sense for real arrangements.
    let real = m <= 2;
    let regions = real.then(|| zaslavsky_regions(&chi).to_string());
    let bounded = real.then(|| bounded_regions(&chi).to_string());
    match fmt {
        Format::Json => ok(json(&json!({
            "family": fam.to_string(),
            "n": a.n,
            "m": m,
            "chi": strings(&chi),
            "regions": regions,
            "bounded_regions": bounded,
            "poincare": strings(&poincare),
            "poincare_at_1": poincare.eval(&BigInt::from(1)).to_string(),
        }))),
        Format::Csv => ok(csv(
            &["family", "n", "m", "regions", "bounded_regions", "poincare_at_1"],
            [vec![
                fam.to_string(),
                a.n.to_string(),
                m.to_string(),
                regions.unwrap_or_default(),
                bounded.unwrap_or_default(),
                poincare.eval(&BigInt::from(1)).to_string(),
            ]],
        )?),
    }
}

pub fn series(a: &SeriesArgs, fmt: Format, force: bool) -> CmdResult {
    let limit = match a.kind {
        SeriesKind::Char => 40,
        _ => 500,
    };
    bound("trunc", a.trunc as u32, limit, force)?;
    // Every coefficient is a polynomial in t, ascending, zero as [].
    let s: PolySeries = match a.kind {
        SeriesKind::Bd => rhs_bd(a.trunc).to_poly_series(),
        SeriesKind::Bbd => rhs_bbd(a.trunc).to_poly_series(),
        SeriesKind::Char => rhs_char_series(a.m, a.trunc)?,
    };
    match fmt {
        Format::Json => ok(json(&s)),
        Format::Csv => ok(csv(
            &["k", "coeff"],
            s.coeffs().iter().enumerate().map(|(k, c)| vec![k.to_string(), strings(c).join(" ")]),
        )?),
    }
}

pub fn verify(a: &VerifyArgs, fmt: Format, force: bool) -> CmdResult {
    let suites: Vec<Suite> = if a.suite == "all" { Suite::ALL.to_vec() } else { vec![a.suite.parse()?] };
    let opts = SuiteOptions { n: a.n, m: a.m, trunc: a.trunc, force };
    let mut reports = Vec::new();
    for s in suites {
        let r = run_suite(s, &opts)?;
        reports.push(if a.timings { r } else { r.without_timings() });
    }
    let pass = reports.iter().all(|r| r.pass);
    for r in &reports {
        for f in r.failures() {
            eprintln!("FAIL {} [{}] {}: {} != {}", r.suite, f.params, f.identity, f.lhs, f.rhs);
        }
    }
    let text = match fmt {
        Format::Json => json(&json!({ "reports": reports, "pass": pass })),
        Format::Csv => {
            let mut header = vec!["suite", "identity", "params", "lhs", "rhs", "pass"];
            if a.timings {
                header.push("millis");
            }
            csv(
                &header,
                reports.iter().flat_map(|r| {
                    r.items.iter().map(move |i| {
                        let mut row = vec![r.suite.to_string(), i.identity.clone(), i.params.clone(), i.lhs.clone(), i.rhs.clone(), i.pass.to_string()];
                        if let Some(ms) = i.millis {
                            row.push(ms.to_string());
                        }
                        row
                    })
                }),
            )?
        }
    };
    Ok(Output { text, pass })
}

pub fn psi(a: &PsiArgs, fmt: Format, force: bool) -> CmdResult {
    let (tree, cycle) = match (&a.tree, &a.find) {
        (Some(path), None) => {
            let mut text = String::new();
            let res = if path.as_os_str() == "-" {
                std::io::stdin().read_to_string(&mut text).map(|_| ())
            } else {
                std::fs::read_to_string(path).map(|s| text = s)
            };
            res.map_err(|e| param(format!("{}: {e}", path.display())))?;
            let t = IdForest::parse_edge_list(&text)?;
            let sigma = bond::psi(&t)?;
            (t, sigma)
        }
        (None, Some(c)) => {
            let sigma: Permutation = c.parse()?;
            let size = sigma.len() as u32;
            bound("size of the D-cycle", size, 10, force)?;
            let t = id_trees_on(sigma.ground())
                .into_iter()
                .find(|t| bond::psi(t).is_ok_and(|s| s == sigma))
                .ok_or_else(|| param(format!("{c} is not the image of any ID tree")))?;
            (t, sigma)
        }
        _ => return Err(param("give exactly one of --tree or --find")),
    };
    // (parent, child), ordered by child.
    let edges: Vec<(u32, u32)> = tree.nodes().iter().filter_map(|&v| tree.parent(v).map(|p| (p, v))).collect();
    match fmt {
        Format::Json => ok(json(&json!({
            "tree": edges.iter().map(|&(p, c)| [p, c]).collect::<Vec<_>>(),
            "cycle": cycle.to_string(),
        }))),
        Format::Csv => ok(csv(
            &["parent", "child", "cycle"],
            edges.iter().map(|&(p, c)| vec![p.to_string(), c.to_string(), cycle.to_string()]),
        )?),
    }
}

pub fn list(a: &EnumerateArgs, fmt: Format, force: bool) -> CmdResult {
    let fam: Family = a.family.parse()?;
    bound("n", a.n, 4, force)?;
    if a.m == 0 {
        return Err(param("m must be at least 1"));
    }
    let members: Vec<String> = if fam.is_labeled() {
        enumerate_labeled(fam, a.n, a.m)?.iter().map(ToString::to_string).collect()
    } else if fam == Family::DescentClass {
        return Err(param("the descent class is only counted; use `table --family descent`"));
    } else {
        let ground: Vec<u32> = (1..=2 * a.n).collect();
        enumerate(fam, &ground)?.iter().map(ToString::to_string).collect()
    };
    match fmt {
        Format::Json => ok(json(&json!({
            "family": fam,
            "n": a.n,
            "m": if fam.is_labeled() { Some(a.m) } else { None },
            "count": members.len(),
            "members": members,
        }))),
        Format::Csv => ok(csv(&["member"], members.into_iter().map(|s| vec![s]))?),
    }
}
