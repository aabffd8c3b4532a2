use super::word::{GrigWord, Letter};

/// Action of a group element on the leaves of the binary tree truncated at `depth`.
///
/// Leaves are `depth`-bit numbers read from the root, the first level in the most
/// significant bit (`0` = left subtree). Words act left to right: `perm` of `xy` is `x`
/// followed by `y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeAction {
    depth: u32,
    perm: Vec<u32>,
}

/// Image of `leaf` under a generator, from `a = (1,1)α`, `b = (a,c)`, `c = (a,d)`,
/// `d = (1,b)`.
fn act(letter: Letter, depth: u32, leaf: u32) -> u32 {
    if depth == 0 {
        return leaf;
    }
    let top = 1u32 << (depth - 1);
    let (high, rest) = (leaf & top, leaf & (top - 1));
    let (left, right) = match letter {
        Letter::A => return leaf ^ top,
        Letter::B => (Some(Letter::A), Some(Letter::C)),
        Letter::C => (Some(Letter::A), Some(Letter::D)),
        Letter::D => (None, Some(Letter::B)),
    };
    let sub = if high == 0 { left } else { right };
    high | sub.map_or(rest, |g| act(g, depth - 1, rest))
}

impl TreeAction {
    pub fn identity(depth: u32) -> Self {
        TreeAction { depth, perm: (0..1u32 << depth).collect() }
    }

    pub fn generator(letter: Letter, depth: u32) -> Self {
        TreeAction { depth, perm: (0..1u32 << depth).map(|x| act(letter, depth, x)).collect() }
    }

    /// Action of `w` on the tree truncated at `depth` (at least 1).
    pub fn of_word(w: &GrigWord, depth: u32) -> Self {
        let gens = Letter::ALL.map(|l| TreeAction::generator(l, depth));
        w.letters()
            .iter()
            .fold(TreeAction::identity(depth), |acc, &l| acc.then(&gens[l as usize]))
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn image(&self, leaf: u32) -> u32 {
        self.perm[leaf as usize]
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &TreeAction) -> TreeAction {
        assert_eq!(self.depth, next.depth);
        TreeAction { depth: self.depth, perm: self.perm.iter().map(|&x| next.perm[x as usize]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Whether the action fixes every vertex down to level `level <= depth`.
    pub fn is_identity_to(&self, level: u32) -> bool {
        let shift = self.depth - level.min(self.depth);
        self.perm.iter().enumerate().all(|(i, &x)| (i as u32) >> shift == x >> shift)
    }

    /// Same action seen on a shallower tree.
    pub fn truncate(&self, level: u32) -> TreeAction {
        let level = level.min(self.depth);
        let shift = self.depth - level;
        TreeAction {
            depth: level,
            perm: (0..1u32 << level).map(|v| self.perm[(v << shift) as usize] >> shift).collect(),
        }
    }

    /// Wreath decomposition `(g_L, g_R)α`: the actions on the two subtrees, one level
    /// shallower, and whether the subtrees are swapped.
    pub fn wreath(&self) -> (TreeAction, TreeAction, bool) {
        assert!(self.depth >= 1);
        let half = 1u32 << (self.depth - 1);
        let section = |base: u32| TreeAction {
            depth: self.depth - 1,
            perm: (0..half).map(|x| self.perm[(base + x) as usize] & (half - 1)).collect(),
        };
        (section(0), section(half), self.perm[0] >= half)
    }

    /// Whether this is an automorphism of the truncated tree: a bijection that maps
    /// vertices at each level consistently.
    pub fn is_tree_automorphism(&self) -> bool {
        let mut seen = vec![false; self.perm.len()];
        for &x in &self.perm {
            if std::mem::replace(&mut seen[x as usize], true) {
                return false;
            }
        }
        (1..self.depth).all(|shift| {
            self.perm
                .chunks(1 << shift)
                .all(|block| block.iter().all(|&x| x >> shift == block[0] >> shift))
        })
    }
}
