use std::collections::BTreeSet;
use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};

use knotlie::cover::reidemeister_schreier;
use knotlie::goldman::HomologyCombination;
use knotlie::knots::{catalog_braid, closure_components, parse_braid, FiberedKnotModel, Knot, CATALOG};
use knotlie::liealg::{bracket_H, bracket_PiK, bracket_pi_k, orbit_canonical, OrbitCombination};
use knotlie::words::{format_rational, parse_word, Alphabet, CyclicWord, Letter, LinearCombination, Word};
use knotlie::{Error, Result};

use crate::{selftest, Command, Format, KnotArg, Outcome, Quotient, RunConfig};

pub fn dispatch(config: &RunConfig, command: &Command) -> Result<Outcome> {
    match command {
        Command::Knot(k) => knot_info(config, k),
        Command::Alexander(k) => alexander(config, k),
        Command::Presentation { knot, cover } => presentation(config, knot, *cover),
        Command::Bracket {
            knot,
            first,
            second,
            quotient,
        } => bracket(config, knot, first, second, *quotient),
        Command::Table {
            knot,
            max_len,
            quotient,
        } => table(config, knot, *max_len, *quotient),
        Command::Selftest {
            suites,
            list,
            mutation,
        } => selftest::command(config, suites, *list, *mutation),
    }
}

/// Catalog name, then `.json` model file, then braid word.
pub fn resolve_knot(arg: &KnotArg) -> Result<Knot> {
    let input = arg.knot.trim();
    if CATALOG.contains(&input) {
        return Knot::catalog(input);
    }
    if input.ends_with(".json") {
        let text = std::fs::read_to_string(Path::new(input))
            .map_err(|e| Error::Invalid(format!("cannot read `{input}`: {e}")))?;
        return FiberedKnotModel::from_json(&text).map(Knot::Fibered);
    }
    if input.starts_with('s') || input.is_empty() {
        return Knot::from_braid(input, arg.strands);
    }
    Err(Error::UnknownKnot(input.to_string()))
}

fn render(config: &RunConfig, value: Value, text: String) -> Result<Outcome> {
    Ok(Outcome::ok(match config.format {
        Format::Json => format!("{value}\n"),
        Format::Text => format!("{text}\n"),
    }))
}

fn components(arg: &KnotArg, knot: &Knot) -> Result<usize> {
    match knot {
        Knot::Fibered(m) => match catalog_braid(m.name()) {
            Some(b) => Ok(closure_components(&parse_braid(b, None)?)),
            None => Ok(1),
        },
        Knot::Presented { .. } => Ok(closure_components(&parse_braid(&arg.knot, arg.strands)?)),
    }
}

fn knot_info(config: &RunConfig, arg: &KnotArg) -> Result<Outcome> {
    let knot = resolve_knot(arg)?;
    let p = knot.presentation();
    let delta = knot.alexander_polynomial()?;
    let components = components(arg, &knot)?;
    let genus = knot.model().ok().map(FiberedKnotModel::genus);
    let value = json!({
        "knot": knot.name(),
        "components": components,
        "fibered": genus.is_some(),
        "genus": genus,
        "generators": p.rank(),
        "relators": p.relators().len(),
        "alexander": delta.to_string(),
    });
    let mut text = format!("knot: {}\ncomponents: {components}\n", knot.name());
    match genus {
        Some(g) => text.push_str(&format!("fibered: yes, genus {g}\n")),
        None => text.push_str("fibered: unknown (no model)\n"),
    }
    text.push_str(&format!(
        "presentation: {} generators, {} relators\nalexander: {delta}",
        p.rank(),
        p.relators().len()
    ));
    render(config, value, text)
}

fn alexander(config: &RunConfig, arg: &KnotArg) -> Result<Outcome> {
    let knot = resolve_knot(arg)?;
    let delta = knot.alexander_polynomial()?;
    render(
        config,
        json!({"knot": knot.name(), "alexander": delta.to_string()}),
        delta.to_string(),
    )
}

fn presentation(config: &RunConfig, arg: &KnotArg, cover: bool) -> Result<Outcome> {
    let knot = resolve_knot(arg)?;
    let p = knot.presentation();
    if !cover {
        let text = format!(
            "< {} | {} >",
            p.generator_names().join(", "),
            p.relators().iter().map(|r| p.format_word(r)).collect::<Vec<_>>().join(", ")
        );
        return render(config, p.to_json(), text);
    }
    knot.model()?;
    let leveled = reidemeister_schreier(&p)?;
    let text = leveled
        .instantiate(0)
        .iter()
        .map(|r| format!("k=0: {r}"))
        .collect::<Vec<_>>()
        .join("\n");
    render(config, leveled.to_json(), text)
}

fn parse_class(text: &str, model: &FiberedKnotModel) -> Result<CyclicWord> {
    let w = parse_word(text)?;
    w.check_rank(model.rank())?;
    Ok(CyclicWord::from_word(&w))
}

/// `{"terms": [{"coeff": .., "class": [..]}]}` and `c <(h)>` text.
fn homology_text(c: &HomologyCombination) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.iter()
        .map(|(h, q)| {
            let v: Vec<String> = h.iter().map(ToString::to_string).collect();
            format!("{} [{}]", format_rational(q), v.join(","))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn orbit_text(c: &OrbitCombination) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(String, String)> = c
        .iter()
        .map(|(k, q)| (k.representative().display(Alphabet::Genus), format_rational(q)))
        .collect();
    terms.sort();
    terms
        .into_iter()
        .map(|(k, q)| format!("{q} [{k}]"))
        .collect::<Vec<_>>()
        .join(" + ")
}

enum BracketValue {
    Classes(LinearCombination),
    Orbits(OrbitCombination),
    Homology(HomologyCombination),
}

impl BracketValue {
    fn to_json(&self) -> Value {
        match self {
            BracketValue::Classes(c) => c.to_json(Alphabet::Genus),
            BracketValue::Orbits(c) => c.to_json(),
            BracketValue::Homology(c) => c.to_json(),
        }
    }

    fn text(&self) -> String {
        match self {
            BracketValue::Classes(c) => c.display(Alphabet::Genus),
            BracketValue::Orbits(c) => orbit_text(c),
            BracketValue::Homology(c) => homology_text(c),
        }
    }
}

fn evaluate(
    model: &FiberedKnotModel,
    x: &CyclicWord,
    y: &CyclicWord,
    quotient: Quotient,
    bound: usize,
) -> Result<BracketValue> {
    Ok(match quotient {
        Quotient::None => BracketValue::Classes(bracket_pi_k(model, x, y)?),
        Quotient::Pi => {
            let a = orbit_canonical(model, x, bound)?;
            let b = orbit_canonical(model, y, bound)?;
            BracketValue::Orbits(bracket_PiK(model, &a, &b, bound)?)
        }
        Quotient::Homology => {
            let hx = x.to_word().abelianize(model.rank())?;
            let hy = y.to_word().abelianize(model.rank())?;
            BracketValue::Homology(bracket_H(model.genus(), &hx, &hy)?)
        }
    })
}

fn bracket(config: &RunConfig, arg: &KnotArg, first: &str, second: &str, quotient: Quotient) -> Result<Outcome> {
    let knot = resolve_knot(arg)?;
    let model = knot.model()?;
    let x = parse_class(first, model)?;
    let y = parse_class(second, model)?;
    let value = evaluate(model, &x, &y, quotient, config.orbit_bound as usize)?;
    render(config, value.to_json(), value.text())
}

/// Nontrivial classes of length at most `max_len`, in shortlex order.
pub fn classes_up_to(rank: usize, max_len: usize) -> Vec<CyclicWord> {
    let letters: Vec<Letter> = (1..=rank).flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect();
    let mut set = BTreeSet::new();
    let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.last().is_some_and(|&p| p.is_inverse_of(l)) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                set.insert(CyclicWord::from_word(&Word::from_letters(v.clone())));
                next.push(v);
            }
        }
        frontier = next;
    }
    let mut out: Vec<CyclicWord> = set.into_iter().filter(|c| !c.is_empty()).collect();
    out.sort_by(|a, b| a.shortlex_cmp(b));
    out
}

pub fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Invalid(format!("cannot start worker threads: {e}")))
}

fn table(config: &RunConfig, arg: &KnotArg, max_len: usize, quotient: Quotient) -> Result<Outcome> {
    let knot = resolve_knot(arg)?;
    let model = knot.model()?;
    if max_len == 0 || max_len > 4 {
        return Err(Error::Invalid("--max-len must be between 1 and 4".into()));
    }
    let classes = classes_up_to(model.rank(), max_len);
    let pairs: Vec<(usize, usize)> = (0..classes.len())
        .flat_map(|i| (i + 1..classes.len()).map(move |j| (i, j)))
        .collect();
    let bound = config.orbit_bound as usize;
    let results: Vec<Result<BracketValue>> = thread_pool(config.jobs)?.install(|| {
        pairs
            .par_iter()
            .map(|&(i, j)| evaluate(model, &classes[i], &classes[j], quotient, bound))
            .collect()
    });
    let mut rows = Vec::with_capacity(pairs.len());
    let mut lines = Vec::with_capacity(pairs.len());
    for (&(i, j), r) in pairs.iter().zip(results) {
        let v = r?;
        let (x, y) = (classes[i].display(Alphabet::Genus), classes[j].display(Alphabet::Genus));
        lines.push(format!("[{x}, {y}] = {}", v.text()));
        rows.push(json!({"x": x, "y": y, "bracket": v.to_json()}));
    }
    render(
        config,
        json!({"knot": knot.name(), "max_len": max_len, "classes": classes.len(), "rows": rows}),
        lines.join("\n"),
    )
}
