//! Enumeration engine: explicit cocycle and coboundary sets.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{Cochain, CohomologyError, CohomologyGroup, Complex, Engine};
use crate::finring::Elem;
use crate::groups::abelian_structure;

/// Backtracking search for `x ∈ C^m` with `(δ^m x)(t) = want[t]` for every
/// target tuple `t`. Values are tried in increasing element order, so
/// solutions come out in lexicographic order. Every assignment counts
/// against `budget`.
fn search(
    cx: &Complex<'_>,
    m: usize,
    want: &[Elem],
    budget: u64,
    first_only: bool,
    what: &str,
) -> Result<Vec<Vec<Elem>>, CohomologyError> {
    let slots = cx.slot_count(m);
    let plan = cx.plan(m);
    // constraint t is checked once its last source slot is assigned
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); slots];
    for (t, term) in plan.iter().enumerate() {
        let last = term.factors.iter().map(|&(s, _)| s).chain([term.first]).max().expect("nonempty");
        due[last].push(t);
    }
    let choices: Vec<&[Elem]> = (0..slots).map(|s| cx.slot_corner(m, s).units.elements()).collect();
    let mut values: Vec<Elem> = (0..slots).map(|s| cx.slot_identity(m, s)).collect();
    let mut pick = vec![0usize; slots];
    let mut found = Vec::new();
    let mut nodes: u64 = 0;
    let mut depth = 0usize;
    if slots == 0 {
        return Ok(vec![Vec::new()]);
    }
    'search: loop {
        // try the current pick at this depth
        if pick[depth] < choices[depth].len() {
            nodes += 1;
            if nodes > budget {
                return Err(CohomologyError::Budget { what: what.to_string(), budget });
            }
            values[depth] = choices[depth][pick[depth]];
            let ok = due[depth].iter().all(|&t| cx.eval_term(m, &plan[t], &values) == want[t]);
            if ok {
                if depth + 1 == slots {
                    found.push(values.clone());
                    if first_only {
                        break 'search;
                    }
                    pick[depth] += 1;
                } else {
                    depth += 1;
                    pick[depth] = 0;
                }
            } else {
                pick[depth] += 1;
            }
        } else {
            if depth == 0 {
                break;
            }
            depth -= 1;
            pick[depth] += 1;
        }
    }
    Ok(found)
}

/// `Zⁿ` as a sorted list.
pub fn enumerate_cocycles(cx: &Complex<'_>, n: usize, budget: u64) -> Result<Vec<Cochain>, CohomologyError> {
    let want = cx.identity(n + 1);
    let sols = search(cx, n, want.values(), budget, false, &format!("search for Z^{n}"))?;
    Ok(sols.into_iter().map(|values| Cochain { arity: n, values }).collect())
}

/// Every cochain of `Cⁿ`, in lexicographic order.
fn all_cochains(cx: &Complex<'_>, n: usize, budget: u64, what: &str) -> Result<Vec<Cochain>, CohomologyError> {
    let count = cx.cochain_count(n);
    if count > BigUint::from(budget) {
        return Err(CohomologyError::Budget { what: format!("{what} needs |C^{n}| = {count} cochains"), budget });
    }
    let count = count.to_usize().expect("below budget");
    let slots = cx.slot_count(n);
    let choices: Vec<&[Elem]> = (0..slots).map(|s| cx.slot_corner(n, s).units.elements()).collect();
    let mut out = Vec::with_capacity(count);
    let mut pick = vec![0usize; slots];
    for _ in 0..count {
        out.push(Cochain { arity: n, values: pick.iter().zip(&choices).map(|(&p, c)| c[p]).collect() });
        for s in (0..slots).rev() {
            pick[s] += 1;
            if pick[s] < choices[s].len() {
                break;
            }
            pick[s] = 0;
        }
    }
    Ok(out)
}

/// `Bⁿ = δ^{n-1}(C^{n-1})` as a sorted list (`B⁰` is trivial).
pub fn enumerate_coboundaries(cx: &Complex<'_>, n: usize, budget: u64) -> Result<Vec<Cochain>, CohomologyError> {
    if n == 0 {
        return Ok(vec![cx.identity(0)]);
    }
    let mut set = BTreeSet::new();
    for c in all_cochains(cx, n - 1, budget, &format!("enumeration of B^{n}"))? {
        set.insert(cx.coboundary(&c)?);
    }
    Ok(set.into_iter().collect())
}

pub(crate) fn enumerated_group(cx: &Complex<'_>, n: usize, budget: u64) -> Result<CohomologyGroup, CohomologyError> {
    let z = enumerate_cocycles(cx, n, budget)?;
    let b = enumerate_coboundaries(cx, n, budget)?;
    let index: HashMap<&[Elem], usize> = z.iter().enumerate().map(|(i, c)| (c.values(), i)).collect();
    if let Some(bad) = b.iter().find(|c| !index.contains_key(c.values())) {
        return Err(CohomologyError::Defect(format!("coboundary {bad} is not a cocycle in degree {n}")));
    }
    let work = (z.len() as u128) * (b.len() as u128);
    if work > budget as u128 {
        return Err(CohomologyError::Budget {
            what: format!("coset sweep of {} cocycles by {} coboundaries", z.len(), b.len()),
            budget,
        });
    }
    // sweep cocycles in lexicographic order; the first unclaimed one of each coset is its representative
    let mut class = vec![usize::MAX; z.len()];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..z.len() {
        if class[i] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(i);
        for bb in &b {
            let j = index[cx.product(&z[i], bb).values()];
            if class[j] != usize::MAX && class[j] != c {
                return Err(CohomologyError::Defect("cosets of B overlap".into()));
            }
            class[j] = c;
        }
    }
    let classes: Vec<usize> = (0..reps.len()).collect();
    let h = abelian_structure(&classes, 0, |a, bcls| class[index[cx.product(&z[reps[a]], &z[reps[bcls]]).values()]])
        .map_err(|e| CohomologyError::Defect(format!("quotient is not an abelian group: {e}")))?;
    let z_order = BigUint::from(z.len());
    let b_order = BigUint::from(b.len());
    Ok(CohomologyGroup {
        n,
        engine: Engine::Enumerate,
        c_order: cx.cochain_count(n),
        h_order: BigUint::from(reps.len()),
        z_order,
        b_order,
        h_factors: h.invariant_factors().to_vec(),
        h_generators: h.generators().iter().map(|&c| z[reps[c]].clone()).collect(),
        representatives: reps.iter().map(|&i| z[i].clone()).collect(),
        canonical_representatives: true,
    })
}

/// Some `ε ∈ C^m` with `δ^m ε = target`, if any.
pub(crate) fn solve_coboundary(
    cx: &Complex<'_>,
    m: usize,
    target: &[Elem],
    budget: u64,
) -> Result<Option<Cochain>, CohomologyError> {
    let sols = search(cx, m, target, budget, true, &format!("witness search in C^{m}"))?;
    Ok(sols.into_iter().next().map(|values| Cochain { arity: m, values }))
}

/// Some `ε ∈ C¹` such that `f·(δ¹ε)⁻¹` is normalized.
pub(crate) fn search_normalizer(
    cx: &Complex<'_>,
    f: &Cochain,
    budget: u64,
) -> Result<Option<Cochain>, CohomologyError> {
    for eps in all_cochains(cx, 1, budget, "normalizer search")? {
        let candidate = cx.product(f, &cx.inverse(&cx.coboundary(&eps)?));
        if cx.is_normalized(&candidate) {
            return Ok(Some(eps));
        }
    }
    Ok(None)
}
