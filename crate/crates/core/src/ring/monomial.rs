use std::cmp::Ordering;

/// Exponent vector of a power product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Squarefree part: every positive exponent replaced by one.
    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub(crate) fn extended(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.resize(self.0.len() + extra, 0);
        Monomial(e)
    }

    pub(crate) fn truncated(&self, n: usize) -> Option<Monomial> {
        if self.0[n..].iter().any(|&e| e != 0) {
            return None;
        }
        Some(Monomial(self.0[..n].to_vec()))
    }
}

/// Order used inside each block of a block order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Lex,
    GrevLex,
}

/// Monomial orders. Variable index 0 is the largest variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Monomials are first compared on the `eliminate` variables with
    /// `elim_order`, ties broken on the remaining variables with
    /// `rest_order`. Any polynomial whose leading monomial avoids the
    /// eliminated block lies entirely in the subring of the others.
    Block {
        eliminate: Vec<usize>,
        elim_order: BaseOrder,
        rest_order: BaseOrder,
    },
}

impl MonomialOrder {
    pub fn elimination(eliminate: Vec<usize>) -> Self {
        let mut eliminate = eliminate;
        eliminate.sort_unstable();
        eliminate.dedup();
        MonomialOrder::Block {
            eliminate,
            elim_order: BaseOrder::GrevLex,
            rest_order: BaseOrder::GrevLex,
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b, 0..a.len()),
            MonomialOrder::Block {
                eliminate,
                elim_order,
                rest_order,
            } => {
                let first = base_cmp(*elim_order, a, b, eliminate.iter().copied());
                if first != Ordering::Equal {
                    return first;
                }
                let rest = (0..a.len()).filter(|i| eliminate.binary_search(i).is_err());
                base_cmp(*rest_order, a, b, rest)
            }
        }
    }
}

fn base_cmp<I>(order: BaseOrder, a: &[u32], b: &[u32], idx: I) -> Ordering
where
    I: DoubleEndedIterator<Item = usize> + Clone,
{
    match order {
        BaseOrder::Lex => {
            for i in idx {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        }
        BaseOrder::GrevLex => grevlex(a, b, idx),
    }
}

fn grevlex<I>(a: &[u32], b: &[u32], idx: I) -> Ordering
where
    I: DoubleEndedIterator<Item = usize> + Clone,
{
    let da: u32 = idx.clone().map(|i| a[i]).sum();
    let db: u32 = idx.clone().map(|i| b[i]).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in idx.rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing variable wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}
