//! Lyndon word enumeration and the tensor expansion of their standard
//! bracketings.

/// All Lyndon words over `0..alphabet` of length at most `maxlen`, in
/// lexicographic order (Duval's generation).
pub(crate) fn lyndon_words_upto(alphabet: usize, maxlen: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![0];
    loop {
        out.push(w.clone());
        let m = w.len();
        while w.len() < maxlen {
            let next = w[w.len() - m];
            w.push(next);
        }
        while w.last() == Some(&((alphabet - 1) as u8)) {
            w.pop();
        }
        if w.is_empty() {
            break;
        }
        *w.last_mut().unwrap() += 1;
    }
    out
}

/// Standard factorization of a Lyndon word of length at least 2:
/// `w = u v` with `v` the lexicographically smallest proper suffix.
/// Both factors are Lyndon and `u < v`.
pub(crate) fn standard_factorization(w: &[u8]) -> (usize, usize) {
    debug_assert!(w.len() >= 2);
    let mut best = 1;
    for start in 2..w.len() {
        if w[start..] < w[best..] {
            best = start;
        }
    }
    (best, w.len() - best)
}

/// Per-degree basis data: Lyndon words of one length, their packed codes
/// and the integer tensor expansions of their standard bracketings.
pub(crate) struct DegreeTable {

    pub words: Vec<Vec<u8>>,
    /// Packed codes, strictly increasing (same order as `words`).
    pub codes: Vec<usize>,
    /// Tensor expansion of each basis bracketing, entries `(code, coeff)`
    /// sorted by code. The smallest code is the word itself with
    /// coefficient 1.
    pub expansions: Vec<Vec<(usize, i64)>>,
}

pub(crate) fn pack(letters: usize, word: &[u8]) -> usize {
    word.iter().fold(0usize, |acc, &l| acc * letters + l as usize)
}

fn merge_product(
    letters: usize,
    left: &[(usize, i64)],
    right: &[(usize, i64)],
    right_degree: usize,
    out: &mut std::collections::BTreeMap<usize, i64>,
    sign: i64,
) {
    let shift = letters.pow(right_degree as u32);
    for &(lc, lv) in left {
        for &(rc, rv) in right {
            let e = out.entry(lc * shift + rc).or_insert(0);
            *e += sign * lv * rv;
            if *e == 0 {
                out.remove(&(lc * shift + rc));
            }
        }
    }
}

impl DegreeTable {
    /// Builds the degree-`k` table; `lower[j]` must hold the tables for
    /// degrees `1..k` (index `j` is degree `j+1`).
    pub fn build(letters: usize, degree: usize, lower: &[&DegreeTable]) -> DegreeTable {
        let words: Vec<Vec<u8>> = lyndon_words_upto(letters, degree)
            .into_iter()
            .filter(|w| w.len() == degree)
            .collect();
        let codes: Vec<usize> = words.iter().map(|w| pack(letters, w)).collect();
        debug_assert!(codes.windows(2).all(|p| p[0] < p[1]));

        let expansions: Vec<Vec<(usize, i64)>> = words
            .iter()
            .map(|w| {
                if degree == 1 {
                    return vec![(w[0] as usize, 1)];
                }
                let (u_len, v_len) = standard_factorization(w);
                let u = &w[..u_len];
                let v = &w[u_len..];
                let u_table = lower[u_len - 1];
                let v_table = lower[v_len - 1];
                let u_exp = &u_table.expansions[u_table
                    .index_of_code(pack(letters, u))
                    .expect("standard factor is Lyndon")];
                let v_exp = &v_table.expansions[v_table
                    .index_of_code(pack(letters, v))
                    .expect("standard factor is Lyndon")];
                let mut acc = std::collections::BTreeMap::new();
                merge_product(letters, u_exp, v_exp, v_len, &mut acc, 1);
                merge_product(letters, v_exp, u_exp, u_len, &mut acc, -1);
                let entries: Vec<(usize, i64)> = acc.into_iter().collect();
                debug_assert_eq!(entries.first(), Some(&(pack(letters, w), 1)));
                entries
            })
            .collect();

        DegreeTable {
            words,
            codes,
            expansions,
        }
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn index_of_code(&self, code: usize) -> Option<usize> {
        self.codes.binary_search(&code).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyndon_counts_small() {
        let all = lyndon_words_upto(2, 5);
        let by_len = |k: usize| all.iter().filter(|w| w.len() == k).count();
        // Binary Lyndon words: 2, 1, 2, 3, 6 for lengths 1..5.
        assert_eq!(by_len(1), 2);
        assert_eq!(by_len(2), 1);
        assert_eq!(by_len(3), 2);
        assert_eq!(by_len(4), 3);
        assert_eq!(by_len(5), 6);
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(standard_factorization(&[0, 1]), (1, 1));
        // aab -> a | ab
        assert_eq!(standard_factorization(&[0, 0, 1]), (1, 2));
        // aabab -> aab | ab? smallest proper suffix of aabab is ab.
        assert_eq!(standard_factorization(&[0, 0, 1, 0, 1]), (3, 2));
    }

    #[test]
    fn expansion_leading_term() {
        let d1 = DegreeTable::build(4, 1, &[]);
        let d2 = DegreeTable::build(4, 2, &[&d1]);
        let d3 = DegreeTable::build(4, 3, &[&d1, &d2]);
        for (w, exp) in d3.words.iter().zip(&d3.expansions) {
            assert_eq!(exp[0], (pack(4, w), 1));
        }
    }
}
