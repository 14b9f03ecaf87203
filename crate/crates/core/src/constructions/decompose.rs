use crate::error::{Error, Result};
use crate::semibrace::{CornerData, LeftSemiBrace};

use super::matched::{matched_product, MatchedData};

/// A semi-brace split as `K ⋈ R` with `K = B·1∘` and `R = E(1∘B)`, and
/// `K` further split as `G ⋈ E(K)` with `G = 1∘B1∘`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// `B = K`, `S = R`.
    pub outer: MatchedData,
    /// Embeddings of `K` and `R` into the original carrier.
    pub k_elements: Vec<usize>,
    pub r_elements: Vec<usize>,
    /// For each element `k·|R| + r` of `K ⋈ R`, its image `k·r` in `B`.
    pub outer_isomorphism: Vec<usize>,
    /// `B = G`, `S = E(K)`.
    pub inner: MatchedData,
    pub g_elements: Vec<usize>,
    pub e_elements: Vec<usize>,
    /// For each element `g·|E(K)| + e` of `G ⋈ E(K)`, its image `e·g` in `K`
    /// (as an index into `k_elements`).
    pub inner_isomorphism: Vec<usize>,
}

/// Builds the matched-product data of both levels and verifies that the
/// products reproduce `B` and `K` under the stated maps.
pub fn decompose(b: &LeftSemiBrace) -> Result<Decomposition> {
    b.require_rho_antihomomorphism()?;
    let corners = b.corners()?;
    let CornerData {
        k,
        g,
        idempotents_k,
        idempotents_r,
        ..
    } = &corners;

    let (k_brace, k_elements) = b.restrict(k)?;
    let (r_brace, r_elements) = b.restrict(idempotents_r)?;
    let pos_in = |set: &[usize], x: usize| {
        set.binary_search(&x)
            .map_err(|_| Error::Inconsistency(format!("action image {x} leaves its corner set")))
    };

    // δ_k(r) = (λ_{k̄}(r̄))‾ and σ_r(k) = (ρ_{r̄}(k̄))‾
    let delta = k_elements
        .iter()
        .map(|&kk| {
            r_elements
                .iter()
                .map(|&r| pos_in(&r_elements, b.bar(b.lambda(b.bar(kk), b.bar(r)))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let sigma = r_elements
        .iter()
        .map(|&r| {
            k_elements
                .iter()
                .map(|&kk| pos_in(&k_elements, b.bar(b.rho(b.bar(r), b.bar(kk)))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let outer = MatchedData {
        b: k_brace,
        s: r_brace,
        delta,
        sigma,
    };
    let nr = r_elements.len();
    let outer_isomorphism: Vec<usize> = (0..k_elements.len() * nr)
        .map(|p| b.dot(k_elements[p / nr], r_elements[p % nr]))
        .collect();
    check_isomorphism(&matched_product(&outer)?, b, &outer_isomorphism, "K ⋈ R")?;

    let (g_brace, g_elements) = b.restrict(g)?;
    let (e_brace, e_elements) = b.restrict(idempotents_k)?;
    // δ_g(e) = ρ_g(e) and σ_e(g) = λ_e(g)
    let delta = g_elements
        .iter()
        .map(|&gg| {
            e_elements
                .iter()
                .map(|&e| pos_in(&e_elements, b.rho(gg, e)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let sigma = e_elements
        .iter()
        .map(|&e| {
            g_elements
                .iter()
                .map(|&gg| pos_in(&g_elements, b.lambda(e, gg)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let inner = MatchedData {
        b: g_brace,
        s: e_brace,
        delta,
        sigma,
    };
    let ne = e_elements.len();
    let inner_isomorphism = (0..g_elements.len() * ne)
        .map(|p| pos_in(&k_elements, b.dot(e_elements[p % ne], g_elements[p / ne])))
        .collect::<Result<Vec<_>>>()?;
    check_isomorphism(
        &matched_product(&inner)?,
        &outer.b,
        &inner_isomorphism,
        "G ⋈ E(K)",
    )?;

    Ok(Decomposition {
        outer,
        k_elements,
        r_elements,
        outer_isomorphism,
        inner,
        g_elements,
        e_elements,
        inner_isomorphism,
    })
}

/// Checks that `map` is a bijection respecting both operations.
pub fn check_isomorphism(
    from: &LeftSemiBrace,
    to: &LeftSemiBrace,
    map: &[usize],
    what: &str,
) -> Result<()> {
    let n = from.size();
    let fail = |detail: String| Err(Error::Inconsistency(format!("{what}: {detail}")));
    if to.size() != n || map.len() != n {
        return fail(format!("sizes {n} and {} differ", to.size()));
    }
    let mut hit = vec![false; n];
    for &y in map {
        if y >= n || std::mem::replace(&mut hit[y], true) {
            return fail("map is not a bijection".into());
        }
    }
    for x in 0..n {
        for y in 0..n {
            if map[from.dot(x, y)] != to.dot(map[x], map[y]) {
                return fail(format!("dot not preserved at ({x}, {y})"));
            }
            if map[from.circ(x, y)] != to.circ(map[x], map[y]) {
                return fail(format!("∘ not preserved at ({x}, {y})"));
            }
        }
    }
    Ok(())
}
