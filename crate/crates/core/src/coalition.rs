//! Player sets as bitmasks and divisions of the electorate.

use std::fmt;

/// Hard limit imposed by the 64-bit coalition mask.
pub const MAX_MASK_PLAYERS: usize = 64;

/// 0-based player index.
pub type PlayerId = usize;

/// A set of players; bit `p` set means player `p` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(pub u64);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    /// All players `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_MASK_PLAYERS);
        if n >= 64 {
            Coalition(u64::MAX)
        } else {
            Coalition((1u64 << n) - 1)
        }
    }

    pub fn singleton(p: PlayerId) -> Self {
        Coalition(1u64 << p)
    }

    pub fn from_players<I: IntoIterator<Item = PlayerId>>(players: I) -> Self {
        Coalition(players.into_iter().fold(0, |acc, p| acc | (1u64 << p)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, p: PlayerId) -> bool {
        self.0 >> p & 1 == 1
    }

    pub fn with(self, p: PlayerId) -> Self {
        Coalition(self.0 | (1u64 << p))
    }

    pub fn without(self, p: PlayerId) -> Self {
        Coalition(self.0 & !(1u64 << p))
    }

    pub fn union(self, other: Coalition) -> Self {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(self, other: Coalition) -> Self {
        Coalition(self.0 & other.0)
    }

    pub fn difference(self, other: Coalition) -> Self {
        Coalition(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in ascending order.
    pub fn players(self) -> impl Iterator<Item = PlayerId> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(p)
        })
    }

    /// Every subset of `self`, in decreasing numeric order ending with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = Coalition> {
        let whole = self.0;
        let mut next = Some(whole);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == 0 { None } else { Some((current - 1) & whole) };
            Some(Coalition(current))
        })
    }

    /// 1-based labels, for user-facing output.
    pub fn labels(self) -> Vec<usize> {
        self.players().map(|p| p + 1).collect()
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders with 1-based labels, e.g. `{1,2}`.
impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

/// An ordered bipartition of the players into YES- and NO-voters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Division {
    yes: Coalition,
    n: usize,
}

impl Division {
    /// Bits outside `0..n` are discarded.
    pub fn new(yes: Coalition, n: usize) -> Self {
        Division { yes: yes.intersection(Coalition::full(n)), n }
    }

    pub fn yes_set(&self) -> Coalition {
        self.yes
    }

    pub fn no_set(&self) -> Coalition {
        Coalition::full(self.n).difference(self.yes)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn votes_yes(&self, p: PlayerId) -> bool {
        self.yes.contains(p)
    }

    /// All `2^n` divisions in increasing mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Division> {
        (0..1u64 << n).map(move |bits| Division { yes: Coalition(bits), n })
    }
}

impl fmt::Display for Division {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.yes, self.no_set())
    }
}
