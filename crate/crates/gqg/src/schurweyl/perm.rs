//! Permutations in one-line notation with canonical reduced words.

use std::fmt;

/// A permutation of {0, ..., l-1}: `map[k]` is the image of k.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(l: usize) -> Self {
        Perm {
            map: (0..l).collect(),
        }
    }

    pub fn from_map(map: Vec<usize>) -> Self {
        debug_assert!({
            let mut seen = vec![false; map.len()];
            map.iter().all(|&x| {
                let fresh = x < map.len() && !seen[x];
                if fresh {
                    seen[x] = true;
                }
                fresh
            })
        });
        Perm { map }
    }

    /// The adjacent transposition (k, k+1), 0-based.
    pub fn transposition(l: usize, k: usize) -> Self {
        let mut map: Vec<usize> = (0..l).collect();
        map.swap(k, k + 1);
        Perm { map }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.map[k]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Composition: (self * other)(k) = self(other(k)).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            map: other.map.iter().map(|&k| self.map[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0; self.map.len()];
        for (k, &v) in self.map.iter().enumerate() {
            map[v] = k;
        }
        Perm { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for a in 0..self.map.len() {
            for b in (a + 1)..self.map.len() {
                if self.map[a] > self.map[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// The canonical reduced word (leftmost-descent elimination): the
    /// returned letters k_1, ..., k_m satisfy
    /// self = s_{k_1} s_{k_2} ... s_{k_m}.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut u = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        'outer: loop {
            for k in 0..u.map.len().saturating_sub(1) {
                if u.map[k] > u.map[k + 1] {
                    u.map.swap(k, k + 1);
                    letters.push(k);
                    continue 'outer;
                }
            }
            break;
        }
        letters.reverse();
        letters
    }

    /// All permutations of degree l, in lexicographic order of one-line
    /// notation.
    pub fn all(l: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        let mut used = vec![false; l];
        fn go(l: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            if cur.len() == l {
                out.push(Perm { map: cur.clone() });
                return;
            }
            for v in 0..l {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    go(l, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        go(l, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_word_reconstructs() {
        for p in Perm::all(4) {
            let word = p.reduced_word();
            assert_eq!(word.len(), p.length());
            let mut rebuilt = Perm::identity(4);
            for &k in &word {
                rebuilt = rebuilt.compose(&Perm::transposition(4, k));
            }
            assert_eq!(rebuilt, p);
        }
    }

    #[test]
    fn compose_and_inverse() {
        for p in Perm::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
        }
    }
}
