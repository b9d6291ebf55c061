use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{CycleType, Perm, SignedPerm};

/// Which half of a group to keep: everything, the elements of even Coxeter
/// length, or those of odd length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    All,
    Plus,
    Minus,
}

impl Class {
    pub fn name(self) -> &'static str {
        match self {
            Class::All => "all",
            Class::Plus => "plus",
            Class::Minus => "minus",
        }
    }

    /// Whether an element with the given sign belongs to the class.
    pub fn admits(self, sign: i8) -> bool {
        match self {
            Class::All => true,
            Class::Plus => sign > 0,
            Class::Minus => sign < 0,
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Class> {
        match s {
            "all" => Ok(Class::All),
            "plus" | "+" => Ok(Class::Plus),
            "minus" | "-" => Ok(Class::Minus),
            _ => Err(Error::InvalidSpec(format!("unknown class `{s}`"))),
        }
    }
}

/// Enumeration cap on the number of ambient group elements visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u128);

impl Budget {
    pub const DEFAULT: Budget = Budget(1_000_000_000);

    pub fn check(self, size: u128) -> Result<()> {
        if size > self.0 {
            Err(Error::BudgetExceeded {
                size,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::DEFAULT
    }
}

/// A subset of `S_n` or `B_n` that the generating functions sum over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// `S_n`, `A_n` or `S_n - A_n`, optionally restricted to `pos_n = r`.
    Sym {
        n: usize,
        class: Class,
        pos_n: Option<usize>,
    },
    /// Permutations with exactly `fixed` fixed points (`fixed = 0` gives
    /// the derangements), split by sign.
    Fixed { n: usize, fixed: usize, class: Class },
    /// A conjugacy class of `S_n`.
    Conjugacy(CycleType),
    /// `B_n`, split by the parity of `inv_B`.
    Hyperoctahedral { n: usize, class: Class },
    /// `D_n`, split by the parity of `inv_D`.
    EvenSigned { n: usize, class: Class },
    /// `B_n - D_n`: an odd number of negative entries.
    OddSigned { n: usize },
}

/// Whether a spec yields [`Perm`]s or [`SignedPerm`]s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementKind {
    Unsigned,
    Signed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Unsigned(Perm),
    Signed(SignedPerm),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Unsigned(p) => p.fmt(f),
            Element::Signed(p) => p.fmt(f),
        }
    }
}

pub type Elements = Box<dyn Iterator<Item = Element> + Send>;

impl GroupSpec {
    pub fn symmetric(n: usize) -> GroupSpec {
        GroupSpec::Sym {
            n,
            class: Class::All,
            pos_n: None,
        }
    }

    pub fn derangements(n: usize, class: Class) -> GroupSpec {
        GroupSpec::Fixed { n, fixed: 0, class }
    }

    pub fn n(&self) -> usize {
        match self {
            GroupSpec::Sym { n, .. }
            | GroupSpec::Fixed { n, .. }
            | GroupSpec::Hyperoctahedral { n, .. }
            | GroupSpec::EvenSigned { n, .. }
            | GroupSpec::OddSigned { n } => *n,
            GroupSpec::Conjugacy(lambda) => lambda.n(),
        }
    }

    pub fn kind(&self) -> ElementKind {
        match self {
            GroupSpec::Sym { .. } | GroupSpec::Fixed { .. } | GroupSpec::Conjugacy(_) => {
                ElementKind::Unsigned
            }
            _ => ElementKind::Signed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Sym {
                n,
                pos_n: Some(r),
                ..
            } if *r == 0 || r > n => Err(Error::InvalidSpec(format!(
                "position {r} of the letter n is outside 1..={n}"
            ))),
            GroupSpec::Fixed { n, fixed, .. } if fixed > n => Err(Error::InvalidSpec(format!(
                "{fixed} fixed points exceed n = {n}"
            ))),
            _ => Ok(()),
        }
    }

    /// Number of ambient elements the enumeration walks through.
    pub fn ambient_size(&self) -> u128 {
        let n = self.n();
        let fact = (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
        let size = match self.kind() {
            ElementKind::Unsigned => fact,
            ElementKind::Signed => fact.and_then(|f| f.checked_mul(1u128.checked_shl(n as u32)?)),
        };
        size.unwrap_or(u128::MAX)
    }

    /// Membership test for an element of the ambient group.
    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (GroupSpec::Sym { class, pos_n, .. }, Element::Unsigned(p)) => {
                pos_n.is_none_or(|r| p.pos_n() == r) && class.admits(sign_of(p.inv()))
            }
            (GroupSpec::Fixed { fixed, class, .. }, Element::Unsigned(p)) => {
                let s = p.stats();
                s.fixed_points == *fixed && class.admits(s.sign)
            }
            (GroupSpec::Conjugacy(lambda), Element::Unsigned(p)) => CycleType::of(p) == *lambda,
            (GroupSpec::Hyperoctahedral { class, .. }, Element::Signed(p)) => {
                class.admits(sign_of(p.inv_b()))
            }
            (GroupSpec::EvenSigned { class, .. }, Element::Signed(p)) => {
                p.is_even_signed() && class.admits(sign_of(p.inv_d()))
            }
            (GroupSpec::OddSigned { .. }, Element::Signed(p)) => !p.is_even_signed(),
            _ => false,
        }
    }

    /// All qualifying elements in lexicographic window order.
    pub fn elements(&self, budget: Budget) -> Result<Elements> {
        self.prepare(budget)?;
        Ok(self.filtered(self.ambient(None)))
    }

    /// Possible first window entries; the blocks they define partition the
    /// stream. Empty when `n = 0`.
    pub fn first_entries(&self) -> Vec<i32> {
        let n = self.n() as i32;
        match self.kind() {
            ElementKind::Unsigned => (1..=n).collect(),
            ElementKind::Signed => (-n..=n).filter(|&v| v != 0).collect(),
        }
    }

    /// The qualifying elements whose first window entry is `first`.
    pub fn elements_starting_with(&self, first: i32, budget: Budget) -> Result<Elements> {
        self.prepare(budget)?;
        if !self.first_entries().contains(&first) {
            return Err(Error::InvalidSpec(format!(
                "{first} cannot start a window of length {}",
                self.n()
            )));
        }
        Ok(self.filtered(self.ambient(Some(first))))
    }

    fn prepare(&self, budget: Budget) -> Result<()> {
        self.validate()?;
        budget.check(self.ambient_size())
    }

    fn ambient(&self, first: Option<i32>) -> Elements {
        let n = self.n();
        match self.kind() {
            ElementKind::Unsigned => Box::new(
                LexPerms::new(n, first.map(|f| f as usize)).map(Element::Unsigned),
            ),
            ElementKind::Signed => Box::new(LexSigned::new(n, first).map(Element::Signed)),
        }
    }

    fn filtered(&self, it: Elements) -> Elements {
        let spec = self.clone();
        Box::new(it.filter(move |e| spec.contains(e)))
    }
}

fn sign_of(len: usize) -> i8 {
    if len.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = |c: &Class| match c {
            Class::All => "",
            Class::Plus => "+",
            Class::Minus => "-",
        };
        match self {
            GroupSpec::Sym { n, class, pos_n } => {
                write!(f, "S_{n}{}", suffix(class))?;
                if let Some(r) = pos_n {
                    write!(f, "^{r}")?;
                }
                Ok(())
            }
            GroupSpec::Fixed { n, fixed, class } => write!(f, "SD_{{{n},{fixed}}}{}", suffix(class)),
            GroupSpec::Conjugacy(lambda) => write!(f, "C_({lambda})"),
            GroupSpec::Hyperoctahedral { n, class } => write!(f, "B_{n}{}", suffix(class)),
            GroupSpec::EvenSigned { n, class } => write!(f, "D_{n}{}", suffix(class)),
            GroupSpec::OddSigned { n } => write!(f, "B_{n}-D_{n}"),
        }
    }
}

/// Permutations of `[n]` in lexicographic order, optionally only those
/// starting with a fixed letter.
struct LexPerms {
    cur: Option<Vec<usize>>,
    locked: bool,
}

impl LexPerms {
    fn new(n: usize, first: Option<usize>) -> LexPerms {
        let cur = match first {
            None => (1..=n).collect(),
            Some(f) => std::iter::once(f).chain((1..=n).filter(|&v| v != f)).collect(),
        };
        LexPerms {
            cur: Some(cur),
            locked: first.is_some(),
        }
    }
}

impl Iterator for LexPerms {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let cur = self.cur.take()?;
        let mut next = cur.clone();
        let lo = usize::from(self.locked);
        if next_permutation(&mut next[lo.min(cur.len())..]) {
            self.cur = Some(next);
        }
        Some(Perm::from_vec_unchecked(cur))
    }
}

/// Rearranges `v` into its lexicographic successor; false when `v` is the
/// last arrangement.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Signed permutations in lexicographic order of their windows, with
/// `-n < ... < -1 < 1 < ... < n`.
struct LexSigned {
    n: usize,
    cur: Option<Vec<i32>>,
    lo: usize,
}

impl LexSigned {
    fn new(n: usize, first: Option<i32>) -> LexSigned {
        let mut cur = Vec::with_capacity(n);
        if let Some(f) = first {
            cur.push(f);
        }
        fill_smallest(n, &mut cur);
        LexSigned {
            n,
            cur: Some(cur),
            lo: usize::from(first.is_some()),
        }
    }
}

/// Completes a partial window with the smallest arrangement of the unused
/// absolute values: all negative, largest magnitude first.
fn fill_smallest(n: usize, w: &mut Vec<i32>) {
    let mut used = vec![false; n + 1];
    for v in w.iter() {
        used[v.unsigned_abs() as usize] = true;
    }
    for a in (1..=n).rev() {
        if !used[a] {
            w.push(-(a as i32));
        }
    }
}

impl Iterator for LexSigned {
    type Item = SignedPerm;

    fn next(&mut self) -> Option<SignedPerm> {
        let cur = self.cur.take()?;
        let n = self.n as i32;
        for i in (self.lo..cur.len()).rev() {
            let mut used = vec![false; self.n + 1];
            for v in &cur[..i] {
                used[v.unsigned_abs() as usize] = true;
            }
            let bigger = (cur[i] + 1..=n)
                .find(|&v| v != 0 && !used[v.unsigned_abs() as usize]);
            if let Some(v) = bigger {
                let mut next = cur[..i].to_vec();
                next.push(v);
                fill_smallest(self.n, &mut next);
                self.cur = Some(next);
                break;
            }
        }
        Some(SignedPerm::from_vec_unchecked(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(spec: GroupSpec) -> usize {
        spec.elements(Budget::DEFAULT).unwrap().count()
    }

    #[test]
    fn cardinalities() {
        assert_eq!(count(GroupSpec::symmetric(4)), 24);
        let a4 = GroupSpec::Sym {
            n: 4,
            class: Class::Plus,
            pos_n: None,
        };
        assert_eq!(count(a4), 12);
        assert_eq!(count(GroupSpec::derangements(4, Class::All)), 9);
        assert_eq!(count(GroupSpec::derangements(4, Class::Plus)), 3);
        assert_eq!(count(GroupSpec::derangements(4, Class::Minus)), 6);
        assert_eq!(count(GroupSpec::Conjugacy("2,2".parse().unwrap())), 3);
        assert_eq!(count(GroupSpec::Hyperoctahedral { n: 3, class: Class::All }), 48);
        assert_eq!(count(GroupSpec::Hyperoctahedral { n: 3, class: Class::Plus }), 24);
        assert_eq!(count(GroupSpec::EvenSigned { n: 4, class: Class::All }), 192);
        assert_eq!(count(GroupSpec::EvenSigned { n: 4, class: Class::Minus }), 96);
        assert_eq!(count(GroupSpec::OddSigned { n: 3 }), 24);
        assert_eq!(count(GroupSpec::symmetric(0)), 1);
        assert_eq!(count(GroupSpec::Hyperoctahedral { n: 0, class: Class::All }), 1);
    }

    #[test]
    fn positional_restriction() {
        let spec = GroupSpec::Sym {
            n: 4,
            class: Class::All,
            pos_n: Some(3),
        };
        assert_eq!(count(spec), 6);
        let bad = GroupSpec::Sym {
            n: 4,
            class: Class::All,
            pos_n: Some(5),
        };
        assert!(matches!(bad.elements(Budget::DEFAULT), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn lexicographic_order() {
        let w: Vec<String> = GroupSpec::symmetric(3)
            .elements(Budget::DEFAULT)
            .unwrap()
            .map(|e| e.to_string())
            .collect();
        assert_eq!(w, ["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1"]);
        let w: Vec<String> = GroupSpec::Hyperoctahedral { n: 2, class: Class::All }
            .elements(Budget::DEFAULT)
            .unwrap()
            .map(|e| e.to_string())
            .collect();
        assert_eq!(w, ["-2,-1", "-2,1", "-1,-2", "-1,2", "1,-2", "1,2", "2,-1", "2,1"]);
    }

    #[test]
    fn blocks_partition_the_stream() {
        for spec in [
            GroupSpec::symmetric(5),
            GroupSpec::Hyperoctahedral { n: 4, class: Class::Minus },
        ] {
            let whole: Vec<Element> = spec.elements(Budget::DEFAULT).unwrap().collect();
            let blocks: Vec<Element> = spec
                .first_entries()
                .into_iter()
                .flat_map(|f| spec.elements_starting_with(f, Budget::DEFAULT).unwrap())
                .collect();
            assert_eq!(whole, blocks);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let spec = GroupSpec::Hyperoctahedral { n: 10, class: Class::All };
        assert_eq!(
            spec.elements(Budget::DEFAULT).err(),
            Some(Error::BudgetExceeded {
                size: 3_715_891_200,
                budget: 1_000_000_000
            })
        );
        assert!(GroupSpec::symmetric(5).elements(Budget(100)).is_err());
    }
}
