use crate::monomial::Mono;
use crate::ring::Roster;
use std::cmp::Ordering;
use std::sync::Arc;

/// A monomial order with an explicit variable priority list.
///
/// `priority` is a permutation of the roster indices, most significant
/// first. `Block` compares the `front` indices (graded-reverse-lex among
/// themselves) before the rest, which makes it an elimination order for
/// the `front` block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex { priority: Vec<usize> },
    GrevLex { priority: Vec<usize> },
    Block { front: Vec<usize>, rest: Vec<usize> },
}

impl TermOrder {
    /// Lex with the roster's listed order as priority.
    pub fn lex(roster: &Arc<Roster>) -> TermOrder {
        TermOrder::Lex {
            priority: (0..roster.len()).collect(),
        }
    }

    /// Graded-reverse-lex with the roster's listed order as priority.
    pub fn grevlex(roster: &Arc<Roster>) -> TermOrder {
        TermOrder::GrevLex {
            priority: (0..roster.len()).collect(),
        }
    }

    /// Elimination order for the given block of variable indices.
    pub fn eliminate(roster: &Arc<Roster>, block: &[usize]) -> TermOrder {
        let front: Vec<usize> = block.to_vec();
        let rest: Vec<usize> = (0..roster.len()).filter(|i| !front.contains(i)).collect();
        TermOrder::Block { front, rest }
    }

    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            TermOrder::Lex { priority } => {
                for &i in priority {
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            TermOrder::GrevLex { priority } => grevlex_on(priority, a, b),
            TermOrder::Block { front, rest } => {
                grevlex_on(front, a, b).then_with(|| grevlex_on(rest, a, b))
            }
        }
    }

    pub fn max<'m>(&self, monos: impl Iterator<Item = &'m Mono>) -> Option<&'m Mono> {
        monos.max_by(|a, b| self.cmp(a, b))
    }

    /// Short descriptor used as a cache key and in dump headers.
    pub fn describe(&self, roster: &Roster) -> String {
        let show = |ix: &[usize]| {
            ix.iter()
                .map(|&i| roster.name(i).to_string())
                .collect::<Vec<_>>()
                .join(">")
        };
        match self {
            TermOrder::Lex { priority } => format!("lex({})", show(priority)),
            TermOrder::GrevLex { priority } => format!("grevlex({})", show(priority)),
            TermOrder::Block { front, rest } => {
                format!("block(elim:{}; {})", show(front), show(rest))
            }
        }
    }
}

fn grevlex_on(ix: &[usize], a: &Mono, b: &Mono) -> Ordering {
    let da: u32 = ix.iter().map(|&i| a.exp(i)).sum();
    let db: u32 = ix.iter().map(|&i| b.exp(i)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Same degree: the last nonzero entry of a-b decides, reversed.
    for &i in ix.iter().rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: Vec<u32>) -> Mono {
        Mono(v)
    }

    #[test]
    fn lex_basic() {
        let ord = TermOrder::Lex {
            priority: vec![0, 1],
        };
        // x > y^5 under lex(x>y)
        assert_eq!(ord.cmp(&m(vec![1, 0]), &m(vec![0, 5])), Ordering::Greater);
    }

    #[test]
    fn grevlex_basic() {
        let ord = TermOrder::GrevLex {
            priority: vec![0, 1, 2],
        };
        // degree first
        assert_eq!(ord.cmp(&m(vec![0, 0, 2]), &m(vec![1, 0, 0])), Ordering::Greater);
        // x*z vs y^2: same degree, last differing exponent (z) smaller wins
        assert_eq!(ord.cmp(&m(vec![1, 0, 1]), &m(vec![0, 2, 0])), Ordering::Less);
        // standard grevlex fact: x^2 > x*y > y^2 > x*z > y*z > z^2
        let seq = [
            m(vec![2, 0, 0]),
            m(vec![1, 1, 0]),
            m(vec![0, 2, 0]),
            m(vec![1, 0, 1]),
            m(vec![0, 1, 1]),
            m(vec![0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert_eq!(ord.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn block_eliminates() {
        // Block with t (index 2) in front: any monomial containing t beats
        // any t-free monomial.
        let ord = TermOrder::Block {
            front: vec![2],
            rest: vec![0, 1],
        };
        assert_eq!(ord.cmp(&m(vec![0, 0, 1]), &m(vec![7, 7, 0])), Ordering::Greater);
    }
}
