//! Bundled check suites behind `specred verify`.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use specred::coincidence::{
    check_mod4, one_common_candidates, pair_from_ak, CoincidenceKind, SlopeParams,
};
use specred::graph::generate::{random_connected_graph, random_graph};
use specred::graph::graph6::parse_graph6;
use specred::graph::{
    build_pineapple, canonical_form, charpoly, charpoly_deleted, connected_induced_subsets, Graph,
    PineappleParams,
};
use specred::pineapple::{
    self, b_count, certify_radius, critical_point, FactoredCharpoly, FamilyRadii,
};
use specred::spectrum::{complementarity_spectrum, spectral_radius};
use specred::{AlgebraicNumber, BigInt, IntPoly, Result};

pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, outcome: Result<(bool, String)>) -> Self {
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

fn pp(alpha: u64, beta: u64) -> PineappleParams {
    PineappleParams { alpha, beta }
}

fn counts_of_graph6(text: &str, b: usize, c: usize) -> Result<(bool, String)> {
    let r = complementarity_spectrum(&parse_graph6(text)?)?;
    Ok((r.b == b && r.c == c, format!("b = {}, c = {}", r.b, r.c)))
}

fn counts_of_pineapple(p: PineappleParams, b: u64, c: u64) -> Result<(bool, String)> {
    let got = (b_count(p), pineapple::c_count(p)?);
    Ok((got == (b, c), format!("b = {}, c = {}", got.0, got.1)))
}

fn example_two_common() -> Result<(bool, String)> {
    let w = check_mod4(8, 22)?
        .ok_or_else(|| specred::Error::Inconsistent("a = 8, k = 22 rejected".into()))?;
    let pair = pair_from_ak(w)?
        .ok_or_else(|| specred::Error::Inconsistent("no pair at a = 8, k = 22".into()))?;
    let shared: Vec<String> = pair.shared.iter().map(|x| x.to_decimal(3)).collect();
    let ok = (pair.p1, pair.p2) == (pp(16, 44), pp(8, 220))
        && pair.common_factor == IntPoly::from_i64s(&[88, -21, 1])
        && shared == ["5.783", "15.217"];
    Ok((
        ok,
        format!("{} / {} share {}", pair.p1, pair.p2, shared.join(", ")),
    ))
}

fn example_one_common() -> Result<(bool, String)> {
    let found = one_common_candidates(11, SlopeParams::new(11, 2)?)?;
    let kind_of = |a: PineappleParams, b: PineappleParams| {
        found
            .iter()
            .find(|p| (p.p1, p.p2) == (a, b))
            .map(|p| p.kind)
    };
    let radius = kind_of(pp(7, 110), pp(9, 99));
    let other = kind_of(pp(17, 165), pp(19, 154));
    let crit = [
        critical_point(pp(7, 110)).to_decimal(3),
        critical_point(pp(9, 99)).to_decimal(3),
    ];
    let eleven = AlgebraicNumber::from_i64(11);
    let certified = certify_radius(pp(7, 110), &eleven)?.is_radius
        && certify_radius(pp(9, 99), &eleven)?.is_radius;
    let ok = radius == Some(CoincidenceKind::OneCommonRadius)
        && other == Some(CoincidenceKind::OneCommonNonRadius)
        && certified
        && crit == ["8.104", "8.745"];
    let show = |k: Option<CoincidenceKind>| k.map_or("missing".to_string(), |k| k.to_string());
    Ok((
        ok,
        format!(
            "kinds {} / {}, critical points {} and {}",
            show(radius),
            show(other),
            crit[0],
            crit[1]
        ),
    ))
}

pub fn examples() -> Vec<Check> {
    vec![
        Check::new("path P4", counts_of_graph6("Ch", 4, 4)),
        Check::new("cycle C5", counts_of_graph6("Dhc", 5, 5)),
        Check::new("P(4,3) counts", counts_of_pineapple(pp(4, 3), 13, 12)),
        Check::new("P(3,8) counts", counts_of_pineapple(pp(3, 8), 19, 17)),
        Check::new("two largest roots shared", example_two_common()),
        Check::new("one integer root shared", example_one_common()),
    ]
}

fn coalescence_identity(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<bool> {
    let x = IntPoly::x();
    let pg: IntPoly = charpoly(g)?;
    let ph: IntPoly = charpoly(h)?;
    let pgu: IntPoly = charpoly_deleted(g, u)?;
    let phv: IntPoly = charpoly_deleted(h, v)?;
    let rhs = &(&(&pg * &phv) + &(&pgu * &ph)) - &(&x * &(&pgu * &phv));
    Ok(charpoly::<BigInt>(&g.coalescence(u, h, v)?)? == rhs)
}

fn lemma_coalescence(rng: &mut ChaCha8Rng, trials: usize) -> Result<(bool, String)> {
    for t in 0..trials {
        let (n1, n2) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let g = random_graph(rng, n1, 0.5)?;
        let h = random_graph(rng, n2, 0.5)?;
        let (u, v) = (rng.gen_range(0..n1), rng.gen_range(0..n2));
        if !coalescence_identity(&g, u, &h, v)? {
            return Ok((false, format!("trial {t} fails")));
        }
    }
    Ok((true, format!("{trials} random pairs")))
}

fn lemma_monotone(rng: &mut ChaCha8Rng, trials: usize) -> Result<(bool, String)> {
    let mut compared = 0;
    for t in 0..trials {
        let n = rng.gen_range(2..=8);
        let g = random_connected_graph(rng, n, 0.3)?;
        let rho = spectral_radius(&g)?;
        for set in connected_induced_subsets(&g, 16)? {
            if set == g.vertices() {
                continue;
            }
            compared += 1;
            if spectral_radius(&g.induced_subgraph(set)?)?.compare(&rho) != Ordering::Less {
                return Ok((false, format!("trial {t}: subgraph {set:?} not smaller")));
            }
        }
    }
    Ok((
        true,
        format!("{compared} proper subgraphs over {trials} graphs"),
    ))
}

fn lemma_bounds(rng: &mut ChaCha8Rng, trials: usize) -> Result<(bool, String)> {
    for t in 0..trials {
        let n = rng.gen_range(1..=8);
        let g = random_connected_graph(rng, n, 0.35)?;
        let r = complementarity_spectrum(&g)?;
        if !r.bounds_hold() || (r.b == n) != g.is_elementary() {
            return Ok((
                false,
                format!("trial {t}: n = {n}, b = {}, c = {}", r.b, r.c),
            ));
        }
    }
    Ok((true, format!("{trials} random connected graphs")))
}

fn lemma_canonical(rng: &mut ChaCha8Rng, trials: usize) -> Result<(bool, String)> {
    use rand::seq::SliceRandom;
    for t in 0..trials {
        let n = rng.gen_range(1..=14);
        let g = random_graph(rng, n, 0.4)?;
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        if canonical_form(&g)? != canonical_form(&g.permuted(&perm))? {
            return Ok((false, format!("trial {t}: relabeling changed the form")));
        }
    }
    Ok((true, format!("{trials} relabelings")))
}

fn lemma_pineapple_charpoly() -> Result<(bool, String)> {
    let mut checked = 0;
    for alpha in 2..=6 {
        for beta in 0..=6 {
            let p = pp(alpha, beta);
            if FactoredCharpoly::new(p).expand() != charpoly::<BigInt>(&build_pineapple(p)?)? {
                return Ok((false, format!("{p}")));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} pineapples")))
}

pub fn lemmas(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![
        Check::new(
            "coalescence characteristic polynomial",
            lemma_coalescence(&mut rng, 100),
        ),
        Check::new(
            "radius grows with connected supergraphs",
            lemma_monotone(&mut rng, 30),
        ),
        Check::new("counting bounds", lemma_bounds(&mut rng, 40)),
        Check::new(
            "canonical form ignores labels",
            lemma_canonical(&mut rng, 40),
        ),
        Check::new(
            "pineapple characteristic polynomial",
            lemma_pineapple_charpoly(),
        ),
    ]
}

fn oracle_box(alpha_max: u64, beta_max: u64) -> Result<(bool, String)> {
    let cache = FamilyRadii::new(alpha_max, beta_max)?;
    let mut checked = 0;
    for alpha in 2..=alpha_max {
        for beta in 0..=beta_max {
            let p = pp(alpha, beta);
            let fast = (b_count(p), cache.c_count(p)?, pineapple::spectral_radius(p));
            let report = complementarity_spectrum(&build_pineapple(p)?)?;
            let top = report.spectrum.last().cloned();
            if (report.b as u64, report.c as u64, top) != (fast.0, fast.1, Some(fast.2)) {
                return Ok((
                    false,
                    format!("{p}: oracle b = {}, c = {}", report.b, report.c),
                ));
            }
            checked += 1;
        }
    }
    Ok((
        true,
        format!("{checked} pineapples with α ≤ {alpha_max}, β ≤ {beta_max}"),
    ))
}

pub fn oracle() -> Vec<Check> {
    vec![Check::new(
        "closed forms match enumeration",
        oracle_box(5, 6),
    )]
}
