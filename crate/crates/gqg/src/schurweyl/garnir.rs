//! Garnir elements and the straightening identity for column
//! semistandard tableaux.

use crate::combin::{EpsilonSignature, Tableau};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::qfield::FieldElem;
use crate::schurweyl::build_v::tableau_vector;
use crate::schurweyl::hecke::{HeckeElement, TensorSpace};
use crate::schurweyl::perm::Perm;
use crate::schurweyl::symmetrizer::Symmetrizer;

/// The Garnir belt data at a 0-based letter `a` of T_minus that has a
/// right neighbor: letters a..=b run down a's column from a, and
/// c..=d (c = b+1) run down the next column from its top to the row of
/// a's neighbor.
#[derive(Clone, Debug)]
pub struct GarnirBelt {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// Computes the belt at letter `a` (0-based) of T_minus, if a right
/// neighbor exists.
pub fn garnir_belt(sym: &Symmetrizer, a: usize) -> Option<GarnirBelt> {
    let (row, col) = sym.t_minus.cell[a];
    let right = (row, col + 1);
    if !sym.t_minus.letter.contains_key(&right) {
        return None;
    }
    let d = sym.t_minus.letter[&right];
    // Bottom of a's column.
    let col_height = sym
        .t_minus
        .cell
        .iter()
        .filter(|(_, cc)| *cc == col)
        .count();
    let b = sym.t_minus.letter[&(col_height - 1, col)];
    let c = b + 1;
    debug_assert_eq!(sym.t_minus.letter[&(0, col + 1)], c);
    Some(GarnirBelt { a, b, c, d })
}

/// Minimal-length right coset representatives of W_{ab} x W_{cd} in
/// W_{ad}: the permutations of the letters a..=d (fixing everything
/// else) whose inverse is increasing on a..=b and on c..=d.
fn min_right_coset_reps(l: usize, belt: &GarnirBelt) -> Vec<Perm> {
    let letters: Vec<usize> = (belt.a..=belt.d).collect();
    let k = letters.len();
    let mut out = Vec::new();
    for p in Perm::all(k) {
        // Build the permutation of degree l acting as p on the letters.
        let mut map: Vec<usize> = (0..l).collect();
        for (pos, &src) in letters.iter().enumerate() {
            map[src] = letters[p.apply(pos)];
        }
        let w = Perm::from_map(map);
        let winv = w.inverse();
        let increasing = |lo: usize, hi: usize| -> bool {
            (lo..hi).all(|x| winv.apply(x) < winv.apply(x + 1))
        };
        if increasing(belt.a, belt.b) && increasing(belt.c, belt.d) {
            out.push(w);
        }
    }
    out
}

/// The Garnir element at the belt: sum over the minimal right coset
/// representatives of (-q^2)^{l(w)} h(w).
pub fn garnir_element(l: usize, belt: &GarnirBelt) -> HeckeElement {
    let neg_q2 = FieldElem::signed_q_pow(-1, 2);
    let mut acc = HeckeElement::zero();
    for w in min_right_coset_reps(l, belt) {
        let c = neg_q2.pow(w.length() as i64).unwrap();
        acc = acc.add(&HeckeElement::basis(w).scale(&c));
    }
    acc
}

/// The straightening data: the conjugated coset representatives as
/// permutations of the belt slots {1, ..., r+s}, block-increasing.
struct SlotPerm {
    /// sigma[i] = the slot whose letter moves into slot i+1 (1-based
    /// slots shifted down by one).
    sigma: Vec<usize>,
    length: usize,
}

fn slot_perms(l: usize, belt: &GarnirBelt) -> Vec<SlotPerm> {
    let s = belt.d - belt.c + 1;
    let r = belt.b - belt.a + 1;
    // Longest element of W_{ab} x W_{cd}: reverse both letter intervals.
    let mut w0map: Vec<usize> = (0..l).collect();
    for x in belt.a..=belt.b {
        w0map[x] = belt.b - (x - belt.a);
    }
    for x in belt.c..=belt.d {
        w0map[x] = belt.d - (x - belt.c);
    }
    let w0 = Perm::from_map(w0map);
    // Slot of a letter: c..=d are slots 0..s, a..=b are slots s..s+r
    // (0-based here).
    let slot_of = |x: usize| -> usize {
        if x >= belt.c {
            x - belt.c
        } else {
            s + (x - belt.a)
        }
    };
    let letter_of_slot = |t: usize| -> usize {
        if t < s {
            belt.c + t
        } else {
            belt.a + (t - s)
        }
    };
    min_right_coset_reps(l, belt)
        .into_iter()
        .map(|w| {
            let sigma_letters = w0.compose(&w).compose(&w0);
            // As a slot permutation: slot t -> slot of sigma(letter of t).
            let fwd: Vec<usize> = (0..r + s)
                .map(|t| slot_of(sigma_letters.apply(letter_of_slot(t))))
                .collect();
            let p = Perm::from_map(fwd);
            // The identification makes sigma block-increasing; take the
            // orientation that satisfies it.
            let block_increasing = |p: &Perm| -> bool {
                (0..s.saturating_sub(1)).all(|t| p.apply(t) < p.apply(t + 1))
                    && (s..(s + r).saturating_sub(1)).all(|t| p.apply(t) < p.apply(t + 1))
            };
            let chosen = if block_increasing(&p) {
                p
            } else {
                let inv = p.inverse();
                debug_assert!(block_increasing(&inv), "no block-increasing orientation");
                inv
            };
            let length = chosen.length();
            SlotPerm {
                sigma: chosen.map().to_vec(),
                length,
            }
        })
        .collect()
}

/// m(sigma, T) from the belt letters: with u_1..u_s the letters at
/// c..=d and u_{s+1}..u_{s+r} the letters at a..=b,
/// X = top slots moved to the bottom block, Y = bottom slots moved to
/// the top block:
///   - |{(i,j) : i<j <= s, i not in X, j in X, u_i = u_j}|
///   - |{(k,l) : s+1 <= k<l, k in Y, l not in Y, u_k = u_l}|
///   + |{(x,y) : x <= s < y, x in X or y in Y, u_x = u_y}|.
fn m_stat(s: usize, r: usize, u: &[u8], sigma: &SlotPerm) -> i64 {
    let inv = {
        let mut inv = vec![0usize; r + s];
        for (t, &v) in sigma.sigma.iter().enumerate() {
            inv[v] = t;
        }
        inv
    };
    let in_x = |i: usize| -> bool { i < s && inv[i] >= s };
    let in_y = |j: usize| -> bool { j >= s && inv[j] < s };
    let mut m = 0i64;
    for i in 0..s {
        for j in (i + 1)..s {
            if !in_x(i) && in_x(j) && u[i] == u[j] {
                m -= 1;
            }
        }
    }
    for k in s..(s + r) {
        for l in (k + 1)..(s + r) {
            if in_y(k) && !in_y(l) && u[k] == u[l] {
                m -= 1;
            }
        }
    }
    for x in 0..s {
        for y in s..(s + r) {
            if (in_x(x) || in_y(y)) && u[x] == u[y] {
                m += 1;
            }
        }
    }
    m
}

/// Verifies the straightening identity for a column-semistandard filling
/// T and belt position a (0-based letter of T_minus):
/// v_T = - sum over nontrivial sigma of (-q)^{len(sigma) + m(sigma, T)}
/// v_{T^sigma}, expanded exactly in the monomial basis.
///
/// Preconditions: T column-semistandard and either T(a) = T(d) odd or
/// T(a) > T(d).
pub fn check_garnir_straightening(
    sig: &EpsilonSignature,
    sym: &Symmetrizer,
    space: &TensorSpace,
    t: &Tableau,
    a: usize,
) -> Result<bool> {
    if !t.is_column_semistandard(sig) {
        return Err(Error::Precondition(
            "tableau is not column-semistandard".into(),
        ));
    }
    let belt = garnir_belt(sym, a).ok_or_else(|| {
        Error::Precondition(format!("letter {} has no right neighbor", a))
    })?;
    let s = belt.d - belt.c + 1;
    let r = belt.b - belt.a + 1;
    // Letters of T at the belt positions, slot order.
    let letter_at = |pos: usize| -> u8 {
        let (row, col) = sym.t_minus.cell[pos];
        t.entry(row, col)
    };
    let mut u: Vec<u8> = Vec::with_capacity(r + s);
    for x in belt.c..=belt.d {
        u.push(letter_at(x));
    }
    for x in belt.a..=belt.b {
        u.push(letter_at(x));
    }
    let ta = u[s]; // T(a)
    let td = u[s - 1]; // T(d)
    let hypothesis = (ta == td && sig.parity(ta as usize) == 1) || ta > td;
    if !hypothesis {
        return Err(Error::Precondition(format!(
            "straightening hypothesis fails: T(a)={} T(d)={}",
            ta, td
        )));
    }

    let lhs = tableau_vector(sym, space, t);
    let mut rhs = SparseVec::zero();
    let neg_q = FieldElem::signed_q_pow(-1, 1);
    for sp in slot_perms(space.dim_degree(), &belt) {
        if sp.sigma.iter().enumerate().all(|(i, &v)| i == v) {
            continue;
        }
        // T^sigma: the belt cell holding u_i now holds u_{sigma(i)}.
        let mut rows = t.rows().to_vec();
        for slot in 0..(r + s) {
            let pos = if slot < s {
                belt.c + slot
            } else {
                belt.a + (slot - s)
            };
            let (row, col) = sym.t_minus.cell[pos];
            rows[row][col] = u[sp.sigma[slot]];
        }
        let t_sigma = Tableau::new(t.shape().clone(), rows)?;
        let exp = sp.length as i64 + m_stat(s, r, &u, &sp);
        let coeff = neg_q.pow(exp)?.neg();
        rhs = rhs.add_scaled(&tableau_vector(sym, space, &t_sigma), &coeff);
    }
    Ok(lhs == rhs)
}
