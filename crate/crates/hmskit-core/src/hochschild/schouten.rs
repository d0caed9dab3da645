//! Contraction of polynomial multivectors against the product y_1⋯y_{n+2}:
//! the single spectral-sequence differential the truncated cohomology needs.
//!
//! δ(f ⊗ v_{i_1}∧…∧v_{i_k}) = Σ_j (−1)^{j−1} f·∂_{i_j}(y_1⋯y_{n+2}) ⊗
//! v_{i_1}∧…∧\hat{v}_{i_j}∧…∧v_{i_k}. The alternating sign is the lone sign
//! convention in this file; a thread-local hook can flip it so mutation
//! tests can prove the displayed values actually constrain it.

use std::cell::Cell;

use crate::exact::rat_int;

use super::{HochschildError, PolyVector, PvTerm};

thread_local! {
    static SCHOUTEN_SIGN_FLIP: Cell<bool> = const { Cell::new(false) };
}

/// True while `with_schouten_sign_flipped` is running on this thread.
pub fn schouten_sign_flipped() -> bool {
    SCHOUTEN_SIGN_FLIP.with(|f| f.get())
}

/// Runs `body` with the contraction sign negated. Test hook only.
pub fn with_schouten_sign_flipped<R>(body: impl FnOnce() -> R) -> R {
    SCHOUTEN_SIGN_FLIP.with(|f| {
        let prev = f.replace(true);
        let out = body();
        f.set(prev);
        out
    })
}

/// Contraction with d(y_1⋯y_{n+2}), term by term. Exact; bidegree
/// (n+1, −n) in the fractional grading. Twisted-sector input is rejected:
/// the differential only lives on the untwisted sector.
pub fn schouten_diff(w: &PolyVector) -> Result<PolyVector, HochschildError> {
    if !w.is_untwisted() {
        return Err(HochschildError::TwistedSector);
    }
    let m = w.order() as usize;
    let flip = if schouten_sign_flipped() { -1i64 } else { 1 };
    let mut out = PolyVector::zero(m as u8 - 2);
    for (term, coeff) in w.terms() {
        for (j, &i) in term.wedge.iter().enumerate() {
            // f·∂_i(y_1⋯y_m): bump every exponent except the i-th.
            let mut exps = term.exps.clone();
            for (pos, e) in exps.iter_mut().enumerate() {
                if pos != i as usize - 1 {
                    *e += 1;
                }
            }
            let wedge: Vec<u8> = term.wedge.iter().copied().filter(|&k| k != i).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 } * flip;
            out.add_term(PvTerm { exps, wedge }, coeff * rat_int(sign));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DiagGroupElement;
    use crate::exact::rat;
    use rand::{Rng, SeedableRng};

    fn product_monomial(n: u8) -> PolyVector {
        let m = n as usize + 2;
        PolyVector::monomial(n, &vec![1u16; m], &[])
    }

    #[test]
    fn diagonal_derivations_contract_to_the_product() {
        for n in 1..=3u8 {
            let m = n + 2;
            for k in 1..=m {
                let mut exps = vec![0u16; m as usize];
                exps[k as usize - 1] = 1;
                let w = PolyVector::monomial(n, &exps, &[k]);
                assert_eq!(schouten_diff(&w).unwrap(), product_monomial(n), "n={n}, k={k}");
            }
        }
    }

    #[test]
    fn displayed_two_vector_image() {
        // y_j y_k (x) v_j ∧ v_k -> prod·y_k (x) v_k − prod·y_j (x) v_j.
        for n in 1..=2u8 {
            let m = n as usize + 2;
            for j in 1..=m as u8 {
                for k in j + 1..=m as u8 {
                    let mut exps = vec![0u16; m];
                    exps[j as usize - 1] = 1;
                    exps[k as usize - 1] = 1;
                    let w = PolyVector::monomial(n, &exps, &[j, k]);

                    let mut pos = vec![1u16; m];
                    pos[k as usize - 1] += 1;
                    let mut neg = vec![1u16; m];
                    neg[j as usize - 1] += 1;
                    let expected = PolyVector::monomial(n, &pos, &[k])
                        .sub(&PolyVector::monomial(n, &neg, &[j]));
                    assert_eq!(schouten_diff(&w).unwrap(), expected, "n={n}, j={j}, k={k}");
                }
            }
        }
    }

    #[test]
    fn constants_die() {
        let one = PolyVector::monomial(1, &[0, 0, 0], &[]);
        assert!(schouten_diff(&one).unwrap().is_zero());
        let poly = PolyVector::monomial(2, &[3, 1, 0, 0], &[]);
        assert!(schouten_diff(&poly).unwrap().is_zero());
    }

    #[test]
    fn twisted_sectors_are_rejected() {
        let g = DiagGroupElement::new(4, vec![0, 0, 1, 3]);
        let w = PolyVector::monomial_in_sector(g, &[2, 0, 0, 0], &[1, 2]);
        assert_eq!(schouten_diff(&w), Err(HochschildError::TwistedSector));
    }

    fn random_multivector(rng: &mut impl Rng, n: u8) -> PolyVector {
        let m = n as usize + 2;
        let mut w = PolyVector::zero(n);
        for _ in 0..rng.gen_range(1..=4) {
            let exps: Vec<u16> = (0..m).map(|_| rng.gen_range(0..=2)).collect();
            let mut wedge: Vec<u8> =
                (1..=m as u8).filter(|_| rng.gen_bool(0.5)).collect();
            wedge.sort();
            let coeff = rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
            w.add_term(PvTerm { exps, wedge }, coeff);
        }
        w
    }

    #[test]
    fn squares_to_zero_on_random_multivectors() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for n in 1..=3u8 {
            for _ in 0..60 {
                let w = random_multivector(&mut rng, n);
                let once = schouten_diff(&w).unwrap();
                let twice = schouten_diff(&once).unwrap();
                assert!(twice.is_zero(), "n={n}, w={w}");
                // The flipped variant is still a differential; the flip only
                // moves displayed values, which other tests pin down.
                let twice_flipped = with_schouten_sign_flipped(|| {
                    schouten_diff(&schouten_diff(&w).unwrap()).unwrap()
                });
                assert!(twice_flipped.is_zero());
            }
        }
    }

    #[test]
    fn bidegree_shift_is_n_plus_one_minus_n() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for n in 1..=3u8 {
            let m = n as usize + 2;
            for _ in 0..40 {
                // Homogeneous input: fixed polynomial degree and wedge size.
                let deg = rng.gen_range(0..=2usize);
                let a = rng.gen_range(1..=m);
                let mut w = PolyVector::zero(n);
                let all: Vec<u8> = (1..=m as u8).collect();
                let monos = super::super::monomials_of_degree(&all, deg, m);
                let wedges = super::super::subsets_of_size(&all, a);
                let exps = monos[rng.gen_range(0..monos.len())].clone();
                let wedge = wedges[rng.gen_range(0..wedges.len())].clone();
                w.add_term(PvTerm { exps, wedge }, rat_int(1));
                let (s0, t0) = w.bidegree().unwrap();
                let dw = schouten_diff(&w).unwrap();
                if dw.is_zero() {
                    continue;
                }
                let (s1, t1) = dw.bidegree().expect("image stays homogeneous");
                assert_eq!(s1 - s0, n as i64 + 1);
                assert_eq!(t1 - t0, rat_int(-(n as i64)));
            }
        }
    }

    #[test]
    fn sign_hook_negates_the_displayed_values() {
        let w = PolyVector::monomial(1, &[1, 0, 0], &[1]);
        let normal = schouten_diff(&w).unwrap();
        let flipped = with_schouten_sign_flipped(|| schouten_diff(&w).unwrap());
        assert_eq!(flipped, normal.neg());
        assert!(!schouten_sign_flipped());
    }
}
