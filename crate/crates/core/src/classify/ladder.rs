//! Ladder-like recognition and the constructive embedding of a ladder-like
//! poset into the ladder of matching size.

use super::ClassifyError;
use crate::constructions::ladder;
use crate::poset::Poset;
use crate::subposet::Embedding;

/// Recognition cap: the search branches over two-chain assignments.
pub const LADDER_LIKE_MAX_N: usize = 24;

/// The two witness chains (C1, C2), each sorted ascending.
pub type LadderWitness = (Vec<usize>, Vec<usize>);

/// Searches for a partition of the elements into chains (C1, C2) such that
/// every comparable cross pair is oriented from C1 up to C2. Empty chains
/// are allowed, so chains and singletons qualify. The search is exhaustive
/// backtracking over assignments along a linear extension; `None` means no
/// witness exists.
pub fn is_ladder_like(q: &Poset) -> Result<Option<LadderWitness>, ClassifyError> {
    if q.len() > LADDER_LIKE_MAX_N {
        return Err(ClassifyError::BudgetExceeded {
            n: q.len(),
            max: LADDER_LIKE_MAX_N,
        });
    }
    let mut order: Vec<usize> = q.elements().collect();
    order.sort_by_key(|&x| (q.below_set(x).len(), x));
    let mut c1 = Vec::new();
    let mut c2 = Vec::new();
    if assign(q, &order, 0, &mut c1, &mut c2) {
        c1.sort_unstable();
        c2.sort_unstable();
        Ok(Some((c1, c2)))
    } else {
        Ok(None)
    }
}

fn assign(q: &Poset, order: &[usize], i: usize, c1: &mut Vec<usize>, c2: &mut Vec<usize>) -> bool {
    if i == order.len() {
        return true;
    }
    let x = order[i];
    // into C1: chain with C1, and no C2 element may lie below x
    if c1.iter().all(|&y| q.comparable(x, y)) && !c2.iter().any(|&y| q.lt(y, x)) {
        c1.push(x);
        if assign(q, order, i + 1, c1, c2) {
            return true;
        }
        c1.pop();
    }
    // into C2: chain with C2; relations against later C1 elements are
    // caught when those are placed, since the order is a linear extension
    if c2.iter().all(|&y| q.comparable(x, y)) {
        c2.push(x);
        if assign(q, order, i + 1, c1, c2) {
            return true;
        }
        c2.pop();
    }
    false
}

/// Validates a ladder-like witness.
fn check_witness(q: &Poset, c1: &[usize], c2: &[usize]) -> bool {
    let mut seen = vec![false; q.len()];
    for &x in c1.iter().chain(c2) {
        if x >= q.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    seen.iter().all(|&s| s)
        && q.is_chain_set(c1)
        && q.is_chain_set(c2)
        && c1.iter().all(|&x| c2.iter().all(|&y| !q.lt(y, x)))
}

/// Embeds a ladder-like poset into the ladder of its own size, following
/// the peel-from-the-top recursion: a maximum element (necessarily
/// placeable in the upper chain) goes to the ladder's top upper rung;
/// otherwise the upper-chain elements of C1 incomparable to max C2 go to
/// the top rungs of the lower chain. The embedding keeps C1 on the ladder's
/// x-chain and C2 on its y-chain throughout.
pub fn embed_into_ladder(
    q: &Poset,
    c1: &[usize],
    c2: &[usize],
) -> Result<Embedding, ClassifyError> {
    if !check_witness(q, c1, c2) {
        return Err(ClassifyError::NotLadderLike);
    }
    let n = q.len();
    let mut map = vec![usize::MAX; n];
    let mut c1: Vec<usize> = c1.to_vec();
    let mut c2: Vec<usize> = c2.to_vec();
    c1.sort_by(|&a, &b| chain_cmp(q, a, b));
    c2.sort_by(|&a, &b| chain_cmp(q, a, b));

    loop {
        let size = c1.len() + c2.len();
        if size == 0 {
            break;
        }
        if c2.is_empty() {
            // a bare chain occupies the bottom rungs of the x-chain
            for (pos, &v) in c1.iter().enumerate() {
                map[v] = pos; // x_{pos+1}
            }
            break;
        }
        let u2 = *c2.last().unwrap();
        let is_max = c1
            .iter()
            .chain(&c2)
            .all(|&v| v == u2 || q.lt(v, u2));
        if is_max {
            map[u2] = n + size - 1; // y_size
            c2.pop();
        } else {
            // elements of C1 incomparable to max C2 form the top of C1
            let split = c1
                .iter()
                .position(|&v| q.incomparable(v, u2))
                .expect("a non-maximum top of C2 leaves incomparable C1 elements");
            let s = c1.len() - split;
            for (off, &v) in c1[split..].iter().enumerate() {
                map[v] = size - s + off; // x_{size-s+1} .. x_size
            }
            c1.truncate(split);
        }
    }

    let emb = Embedding { map };
    debug_assert!(emb.verify(q, &ladder(n)));
    Ok(emb)
}

fn chain_cmp(q: &Poset, a: usize, b: usize) -> std::cmp::Ordering {
    if a == b {
        std::cmp::Ordering::Equal
    } else if q.lt(a, b) {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{butterfly, n_poset, skewed_butterfly};

    #[test]
    fn chains_are_ladder_like_with_empty_c2() {
        let (c1, c2) = is_ladder_like(&Poset::chain(4)).unwrap().unwrap();
        assert_eq!(c1, vec![0, 1, 2, 3]);
        assert!(c2.is_empty());
    }

    #[test]
    fn n_poset_is_ladder_like() {
        let n = n_poset();
        let (c1, c2) = is_ladder_like(&n).unwrap().unwrap();
        assert!(check_witness(&n, &c1, &c2));
    }

    #[test]
    fn butterfly_is_not_ladder_like() {
        assert_eq!(is_ladder_like(&butterfly()).unwrap(), None);
    }

    #[test]
    fn skewed_butterfly_is_not_ladder_like() {
        assert_eq!(is_ladder_like(&skewed_butterfly()).unwrap(), None);
    }

    #[test]
    fn singleton_embeds_into_ladder_one() {
        let q = Poset::antichain(1);
        let (c1, c2) = is_ladder_like(&q).unwrap().unwrap();
        let e = embed_into_ladder(&q, &c1, &c2).unwrap();
        assert!(e.verify(&q, &ladder(1)));
    }

    #[test]
    fn chain_three_embeds_into_ladder_three() {
        let q = Poset::chain(3);
        let (c1, c2) = is_ladder_like(&q).unwrap().unwrap();
        let e = embed_into_ladder(&q, &c1, &c2).unwrap();
        assert!(e.verify(&q, &ladder(3)));
        // cross-check through the containment search
        assert!(crate::subposet::contains_subposet(&ladder(3), &q)
            .unwrap()
            .is_some());
    }

    #[test]
    fn n_poset_embeds_into_ladder_four() {
        let q = n_poset();
        let (c1, c2) = is_ladder_like(&q).unwrap().unwrap();
        let e = embed_into_ladder(&q, &c1, &c2).unwrap();
        assert!(e.verify(&q, &ladder(4)));
    }

    #[test]
    fn two_plus_two_embeds() {
        let q = Poset::chain(2).disjoint_union(&Poset::chain(2));
        let (c1, c2) = is_ladder_like(&q).unwrap().unwrap();
        let e = embed_into_ladder(&q, &c1, &c2).unwrap();
        assert!(e.verify(&q, &ladder(4)));
    }

    #[test]
    fn bad_witness_is_rejected() {
        let q = Poset::chain(2);
        assert!(matches!(
            embed_into_ladder(&q, &[0], &[]),
            Err(ClassifyError::NotLadderLike)
        )); // 1 uncovered
        assert!(matches!(
            embed_into_ladder(&q, &[1], &[0]),
            Err(ClassifyError::NotLadderLike)
        )); // oriented the wrong way
    }

    #[test]
    fn size_cap_reports_budget() {
        let q = Poset::antichain(25);
        assert!(matches!(
            is_ladder_like(&q),
            Err(ClassifyError::BudgetExceeded { .. })
        ));
    }
}
