//! Structure engine: `δⁿ` as an integer matrix between products of cyclic
//! groups, with kernels, images and `Hⁿ` read off Smith normal forms.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::{Cochain, CohomologyError, CohomologyGroup, Complex, Engine};
use crate::groups::abelian::{span_elements, subquotient};
use crate::groups::{hom_kernel_image, HomKernelImage};

/// Largest integer matrix (rows × columns) the engine will reduce.
pub const MAX_MATRIX_ENTRIES: usize = 4_000_000;

/// `δⁿ` on the generators of `Cⁿ`, in the coordinates of `Cⁿ⁺¹`.
pub fn delta_matrix(cx: &Complex<'_>, n: usize) -> Result<Vec<Vec<u64>>, CohomologyError> {
    let rows = cx.moduli(n + 1).len();
    let cols = cx.moduli(n).len();
    if rows.saturating_mul(rows + cols) > MAX_MATRIX_ENTRIES {
        return Err(CohomologyError::Budget {
            what: format!("structure engine matrix for delta^{n} would be {rows} x {}", rows + cols),
            budget: MAX_MATRIX_ENTRIES as u64,
        });
    }
    let mut images = Vec::with_capacity(cols);
    for s in 0..cx.slot_count(n) {
        for &u in cx.slot_corner(n, s).presentation.generators() {
            let mut basis = cx.identity(n);
            basis.values[s] = u;
            images.push(cx.coords(&cx.coboundary(&basis)?));
        }
    }
    Ok(images)
}

fn kernel_image(cx: &Complex<'_>, n: usize) -> Result<HomKernelImage, CohomologyError> {
    let images = delta_matrix(cx, n)?;
    hom_kernel_image(&cx.moduli(n), &cx.moduli(n + 1), &images)
        .map_err(|e| CohomologyError::Defect(format!("delta^{n} is not a homomorphism: {e}")))
}

/// `Hⁿ` via Smith normal forms. Representatives are made canonical (least
/// cochain per coset) when `|Hⁿ|·|Bⁿ| ≤ budget`.
pub fn structure_cohomology(cx: &Complex<'_>, n: usize, budget: u64) -> Result<CohomologyGroup, CohomologyError> {
    let moduli = cx.moduli(n);
    let zn = kernel_image(cx, n)?;
    let (b_order, sub) = if n == 0 {
        (BigUint::one(), Vec::new())
    } else {
        let images = delta_matrix(cx, n - 1)?;
        let prev = hom_kernel_image(&cx.moduli(n - 1), &moduli, &images)
            .map_err(|e| CohomologyError::Defect(format!("delta^{} is not a homomorphism: {e}", n - 1)))?;
        (prev.image_order, images)
    };
    let z_order = zn.kernel_order.clone();
    if &z_order % &b_order != BigUint::ZERO {
        return Err(CohomologyError::Defect(format!("|B^{n}| = {b_order} does not divide |Z^{n}| = {z_order}")));
    }
    let h_order = &z_order / &b_order;
    let (h_factors, gens) = subquotient(&moduli, &zn.kernel_lattice, &sub)
        .map_err(|e| CohomologyError::Defect(format!("B^{n} is not inside Z^{n}: {e}")))?;
    let product: BigUint = h_factors.iter().fold(BigUint::one(), |acc, &d| acc * d);
    if product != h_order {
        return Err(CohomologyError::Defect(format!("H^{n} factors {h_factors:?} do not multiply to {h_order}")));
    }
    let h_generators: Vec<Cochain> = gens.iter().map(|c| cx.from_coords(n, c)).collect();
    for g in &h_generators {
        if !cx.is_cocycle(g)? {
            return Err(CohomologyError::Defect(format!("H^{n} generator {g} is not a cocycle")));
        }
    }

    let work = &h_order * &b_order;
    let (representatives, canonical) = if work <= BigUint::from(budget) {
        let limit = b_order.to_usize().expect("within budget");
        let b = span_elements(&moduli, &sub, limit).expect("B has the computed order");
        let b: Vec<Cochain> = b.iter().map(|c| cx.from_coords(n, c)).collect();
        let mut reps = Vec::new();
        let classes: usize = h_factors.iter().map(|&d| d as usize).product();
        for idx in 0..classes {
            let mut rem = idx;
            let mut h = cx.identity(n);
            for (g, &d) in h_generators.iter().zip(&h_factors).rev() {
                for _ in 0..rem % d as usize {
                    h = cx.product(&h, g);
                }
                rem /= d as usize;
            }
            let least = b.iter().map(|bb| cx.product(&h, bb)).min().expect("B contains the identity");
            reps.push(least);
        }
        reps.sort();
        (reps, true)
    } else {
        (Vec::new(), false)
    };
    Ok(CohomologyGroup {
        n,
        engine: Engine::Structure,
        c_order: cx.cochain_count(n),
        z_order,
        b_order,
        h_order,
        h_factors,
        h_generators,
        representatives,
        canonical_representatives: canonical,
    })
}
