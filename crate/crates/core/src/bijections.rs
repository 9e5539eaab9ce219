//! The maps between the four object families, each with its inverse.
//!
//! On a staircase with weights `s`, a rook in slot `j` of block `u` and
//! row `v` corresponds to vertex `v + 1` hanging from slot `j` of vertex
//! `u`; this matches rook placements on the board of weight `s` with
//! increasing trees of arity `(s_1, ..., s_n, m)` for any slot count `m`
//! given to the final vertex. On double staircases the placement can also
//! be read column by column as a Dyck word, and row prefixes give a chain
//! of Dyck words. Permutations enter through the classical minimum-root
//! recursion to binary trees and through the letter-class profile to
//! chains; the four translations commute.

use alloc::vec::Vec;

use crate::dyck::{flip_position, DyckChain, DyckWord, Step};
use crate::perm::{LetterClass, Permutation};
use crate::placement::{RookPlacement, Side};
use crate::projected::ProjectedPlacement;
use crate::shape::StaircaseShape;
use crate::tree::IncreasingTree;
use crate::{Error, Result};

/// Reads a placement on the board of weights `s` as an increasing tree of
/// arity `(s_1, ..., s_n, last_arity)`: a rook in slot `j` of block `u`
/// and row `v` makes `v + 1` the `j`-th child of `u`. The slot count of
/// the final vertex does not affect the correspondence; 1 is the
/// conventional choice, 2 keeps double-staircase images binary.
pub fn rook_to_tree(placement: &RookPlacement, last_arity: usize) -> IncreasingTree {
    let shape = placement.shape();
    let n = shape.rows();
    let mut arity: Vec<usize> = shape.weights().to_vec();
    arity.push(last_arity);
    // Edge i belongs to child i + 2, i.e. to the rook of row i + 1.
    let mut edges = Vec::with_capacity(n);
    for &col in placement.cols() {
        let block = shape.block_of_column(col).expect("rook column inside the shape");
        let start = *shape.block_columns(block).expect("block in range").start();
        edges.push((block, col - start + 1));
    }
    IncreasingTree::new(arity, edges).expect("placement rows give increasing edges")
}

/// Inverse of [`rook_to_tree`]: vertex `v + 1` in slot `j` of vertex `u`
/// puts a rook in row `v`, slot `j` of block `u`. The final vertex never
/// has children, so only the first `m - 1` arities shape the board.
pub fn tree_to_rook(tree: &IncreasingTree) -> Result<RookPlacement> {
    let m = tree.vertices();
    if m == 0 {
        return Err(Error::EmptyTree);
    }
    let shape = StaircaseShape::new(tree.arity()[..m - 1].to_vec())?;
    let mut cols = alloc::vec![0usize; m - 1];
    for (child, parent, slot) in tree.edges() {
        let start = *shape.block_columns(parent).expect("parent is a block").start();
        cols[child - 2] = start + slot - 1;
    }
    Ok(RookPlacement::new(shape, cols).expect("tree edges give non-attacking rooks"))
}

/// The minimum-root recursion: the smallest letter becomes the root, the
/// subword to its left the left subtree, the subword to its right the
/// right subtree. Letter classes translate to child patterns: valleys get
/// two children, peaks none, double falls a left child only, double
/// rises a right child only.
pub fn perm_to_tree(sigma: &Permutation) -> IncreasingTree {
    let m = sigma.len();
    let mut edges = alloc::vec![(0usize, 0usize); m.saturating_sub(1)];

    fn build(word: &[usize], edges: &mut [(usize, usize)]) -> Option<usize> {
        let pos = word.iter().enumerate().min_by_key(|&(_, &v)| v)?.0;
        let root = word[pos];
        if let Some(left) = build(&word[..pos], edges) {
            edges[left - 2] = (root, 1);
        }
        if let Some(right) = build(&word[pos + 1..], edges) {
            edges[right - 2] = (root, 2);
        }
        Some(root)
    }

    build(sigma.word(), &mut edges);
    IncreasingTree::new(alloc::vec![2; m], edges).expect("subtree minima give increasing edges")
}

/// Inverse of [`perm_to_tree`]: the in-order readout (left subtree, root,
/// right subtree) of a binary increasing tree.
pub fn tree_to_perm(tree: &IncreasingTree) -> Result<Permutation> {
    if !tree.is_binary() {
        return Err(Error::NotBinary);
    }
    let m = tree.vertices();
    let mut children = alloc::vec![[None, None]; m + 1];
    for (child, parent, slot) in tree.edges() {
        children[parent][slot - 1] = Some(child);
    }
    let mut word = Vec::with_capacity(m);

    fn visit(v: usize, children: &[[Option<usize>; 2]], word: &mut Vec<usize>) {
        if let Some(left) = children[v][0] {
            visit(left, children, word);
        }
        word.push(v);
        if let Some(right) = children[v][1] {
            visit(right, children, word);
        }
    }

    if m > 0 {
        visit(1, &children, &mut word);
    }
    Ok(Permutation::new(word).expect("in-order readout visits every label once"))
}

/// The column word of a double-staircase placement: an up step, then one
/// step per column (up for occupied, down for empty), then a down step.
pub fn dyck_word_of(placement: &RookPlacement) -> Result<DyckWord> {
    if !placement.shape().is_double() {
        return Err(Error::NotDoubleStaircase);
    }
    let n = placement.rows();
    let mut occupied = alloc::vec![false; 2 * n + 1];
    for &col in placement.cols() {
        occupied[col] = true;
    }
    let mut steps = Vec::with_capacity(2 * n + 2);
    steps.push(Step::Up);
    for col in 1..=2 * n {
        steps.push(if occupied[col] { Step::Up } else { Step::Down });
    }
    steps.push(Step::Down);
    Ok(DyckWord::new(steps).expect("column words of staircase placements stay non-negative"))
}

/// The letter-class profile: an up step, then for each letter
/// `1 ..= m-1` the two steps its class dictates (valley UU, double fall
/// UD, double rise DU, peak DD), then a down step.
pub fn profile(sigma: &Permutation) -> Result<DyckWord> {
    if sigma.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    let classes = sigma.letter_classes();
    let mut steps = Vec::with_capacity(2 * sigma.len());
    steps.push(Step::Up);
    for &class in &classes[..sigma.len() - 1] {
        let pair = match class {
            LetterClass::Valley => [Step::Up, Step::Up],
            LetterClass::Peak => [Step::Down, Step::Down],
            LetterClass::DoubleRise => [Step::Down, Step::Up],
            LetterClass::DoubleFall => [Step::Up, Step::Down],
        };
        steps.extend_from_slice(&pair);
    }
    steps.push(Step::Down);
    Ok(DyckWord::new(steps).expect("letter profiles stay non-negative"))
}

/// Column words of the row prefixes: entry `i` is the word of the
/// placement restricted to the top `i - 1` rows, so an `n`-row placement
/// yields an `(n+1)`-chain starting at `UD`.
pub fn rook_to_chain(placement: &RookPlacement) -> Result<DyckChain> {
    if !placement.shape().is_double() {
        return Err(Error::NotDoubleStaircase);
    }
    let words: Vec<DyckWord> = (0..=placement.rows())
        .map(|rows| dyck_word_of(&placement.truncate(rows)).expect("prefix stays double"))
        .collect();
    Ok(DyckChain::new(words).expect("prefix words grow by one ribbon per row"))
}

/// Inverse of [`rook_to_chain`]: the flip position of each chain step,
/// shifted one left, is the column of the next row's rook.
pub fn chain_to_rook(chain: &DyckChain) -> Result<RookPlacement> {
    let m = chain.len();
    if m == 0 {
        return Err(Error::EmptyChain);
    }
    let words = chain.words();
    let mut cols = Vec::with_capacity(m - 1);
    for i in 1..m {
        let pos = flip_position(&words[i - 1], &words[i]).expect("validated chain step");
        cols.push(pos - 1);
    }
    Ok(RookPlacement::new(StaircaseShape::double(m - 1), cols)
        .expect("chain flips land in distinct columns"))
}

/// The profiles of the successive maximum deletions, smallest first:
/// `sigma` on `m` letters yields the `m`-chain ending at its own profile.
pub fn perm_to_chain(sigma: &Permutation) -> DyckChain {
    let m = sigma.len();
    let mut words = alloc::vec![DyckWord::unit(); m];
    let mut current = sigma.clone();
    for i in (0..m).rev() {
        words[i] = profile(&current).expect("non-empty during deletion");
        current = current.delete_max().expect("non-empty during deletion");
    }
    DyckChain::new(words).expect("deleting the maximum shrinks the profile by one ribbon")
}

/// Inverse of [`perm_to_chain`], built by re-inserting maxima: a flip at
/// an even position `2i` inserts the new maximum immediately left of the
/// letter `i`, a flip at `2i + 1` immediately right of it.
pub fn chain_to_perm(chain: &DyckChain) -> Permutation {
    let mut sigma = Permutation::identity(if chain.is_empty() { 0 } else { 1 });
    let words = chain.words();
    for i in 1..chain.len() {
        let pos = flip_position(&words[i - 1], &words[i]).expect("validated chain step");
        let (target, after) = if pos % 2 == 0 { (pos / 2, false) } else { ((pos - 1) / 2, true) };
        sigma = sigma.insert_max(target, after).expect("flip targets an existing letter");
    }
    sigma
}

/// Removes the empty columns of a double-staircase placement, yielding a
/// square placement whose blocks all have at most two columns.
pub fn project(placement: &RookPlacement) -> Result<ProjectedPlacement> {
    if !placement.shape().is_double() {
        return Err(Error::NotDoubleStaircase);
    }
    let shape = placement.shape();
    let mut occupied: Vec<usize> = placement.cols().to_vec();
    occupied.sort_unstable();
    let heights: Vec<usize> = occupied
        .iter()
        .map(|&col| shape.block_height(shape.block_of_column(col).expect("occupied column")))
        .collect();
    let cols: Vec<usize> = placement
        .cols()
        .iter()
        .map(|&col| occupied.binary_search(&col).expect("own column") + 1)
        .collect();
    Ok(ProjectedPlacement::new(heights, cols).expect("projection keeps one rook per row and column"))
}

/// The unique left- or right-aligned double-staircase placement
/// projecting to `s`. A block of one column lands in the left (or right)
/// column of the staircase block of the same height; a block of two
/// columns is copied; absent heights stay empty.
pub fn lift(projected: &ProjectedPlacement, side: Side) -> Result<RookPlacement> {
    lift_by_choices(projected, |_| side)
}

/// All double-staircase preimages of `s`: every single-column block
/// independently goes left or right, giving `2^bso` placements. The list
/// starts at the all-left choice (the left-aligned lift) and ends at the
/// all-right one.
pub fn fibre(projected: &ProjectedPlacement) -> Result<Vec<RookPlacement>> {
    let singles = projected.blocks().iter().filter(|b| b.size == 1).count();
    (0..1u64 << singles)
        .map(|mask| {
            lift_by_choices(projected, |single_index| {
                if mask >> single_index & 1 == 0 {
                    Side::Left
                } else {
                    Side::Right
                }
            })
        })
        .collect()
}

fn lift_by_choices(
    projected: &ProjectedPlacement,
    mut choose: impl FnMut(usize) -> Side,
) -> Result<RookPlacement> {
    let n = projected.size();
    let mut cols = alloc::vec![0usize; n];
    let mut single_index = 0;
    for block in projected.blocks() {
        if block.size > 2 {
            return Err(Error::BlockTooWide { height: block.height, size: block.size });
        }
        // Block of height h in the staircase is block u = n - h + 1, with
        // global columns 2u-1 and 2u.
        let left_col = 2 * (n - block.height + 1) - 1;
        if block.size == 1 {
            let row = projected.row_in_column(block.start).expect("every column has a rook");
            let offset = match choose(single_index) {
                Side::Left => 0,
                Side::Right => 1,
            };
            cols[row - 1] = left_col + offset;
            single_index += 1;
        } else {
            for k in 0..2 {
                let row = projected.row_in_column(block.start + k).expect("every column has a rook");
                cols[row - 1] = left_col + k;
            }
        }
    }
    Ok(RookPlacement::new(StaircaseShape::double(n), cols)
        .expect("height-matched copies are non-attacking"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::placement::Alignment;
    use alloc::string::ToString;
    use alloc::vec;

    fn figure_placement() -> RookPlacement {
        RookPlacement::new(StaircaseShape::double(5), vec![2, 4, 5, 1, 7]).unwrap()
    }

    fn figure_tree() -> IncreasingTree {
        IncreasingTree::new(vec![2; 6], vec![(1, 2), (2, 2), (3, 1), (1, 1), (4, 1)]).unwrap()
    }

    fn figure_perm() -> Permutation {
        Permutation::new(vec![5, 1, 2, 6, 4, 3]).unwrap()
    }

    fn figure_chain() -> DyckChain {
        let words = ["UD", "UDUD", "UDUDUD", "UDUDUUDD", "UUUDUUDDDD", "UUUDUUDUDDDD"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        DyckChain::new(words).unwrap()
    }

    #[test]
    fn rook_tree_running_example() {
        assert_eq!(rook_to_tree(&figure_placement(), 2), figure_tree());
        assert_eq!(tree_to_rook(&figure_tree()).unwrap(), figure_placement());
    }

    #[test]
    fn rook_tree_small_cases() {
        let one = RookPlacement::new(StaircaseShape::double(1), vec![1]).unwrap();
        let tree = rook_to_tree(&one, 1);
        assert_eq!(tree.arity(), &[2, 1]);
        assert_eq!(tree.parent(2), Some((1, 1)));

        let single = IncreasingTree::singleton(1);
        let empty = tree_to_rook(&single).unwrap();
        assert_eq!(empty.rows(), 0);

        let ternary = RookPlacement::new(StaircaseShape::k_tuple(3, 2).unwrap(), vec![2, 4])
            .unwrap();
        let tree = rook_to_tree(&ternary, 1);
        assert_eq!(tree.arity(), &[3, 3, 1]);
        assert_eq!(tree.parent(2), Some((1, 2)));
        assert_eq!(tree.parent(3), Some((2, 1)));
        assert_eq!(tree_to_rook(&tree).unwrap(), ternary);

        assert_eq!(
            tree_to_rook(&IncreasingTree::new(vec![], vec![]).unwrap()).unwrap_err(),
            Error::EmptyTree
        );
    }

    #[test]
    fn stanley_running_example() {
        assert_eq!(perm_to_tree(&figure_perm()), figure_tree());
        assert_eq!(tree_to_perm(&figure_tree()).unwrap(), figure_perm());
    }

    #[test]
    fn stanley_small_cases() {
        let one = Permutation::new(vec![1]).unwrap();
        assert_eq!(perm_to_tree(&one).vertices(), 1);
        assert_eq!(tree_to_perm(&perm_to_tree(&one)).unwrap(), one);

        // Letter 1 is a double fall in 21, so vertex 1 has only a left child.
        let tree21 = perm_to_tree(&Permutation::new(vec![2, 1]).unwrap());
        assert_eq!(tree21.child(1, 1), Some(2));
        assert_eq!(tree21.child(1, 2), None);
        let tree12 = perm_to_tree(&Permutation::new(vec![1, 2]).unwrap());
        assert_eq!(tree12.child(1, 1), None);
        assert_eq!(tree12.child(1, 2), Some(2));

        let inorder = IncreasingTree::new(vec![2, 2, 2], vec![(1, 1), (1, 2)]).unwrap();
        assert_eq!(tree_to_perm(&inorder).unwrap().word(), &[2, 1, 3]);

        let ternary = IncreasingTree::new(vec![3, 3], vec![(1, 1)]).unwrap();
        assert_eq!(tree_to_perm(&ternary).unwrap_err(), Error::NotBinary);
    }

    #[test]
    fn dyck_word_running_example() {
        assert_eq!(dyck_word_of(&figure_placement()).unwrap().to_string(), "UUUDUUDUDDDD");
        let empty = RookPlacement::new(StaircaseShape::double(0), vec![]).unwrap();
        assert_eq!(dyck_word_of(&empty).unwrap().to_string(), "UD");
        let one = RookPlacement::new(StaircaseShape::double(1), vec![1]).unwrap();
        assert_eq!(dyck_word_of(&one).unwrap().to_string(), "UUDD");
        let ternary = RookPlacement::new(StaircaseShape::k_tuple(3, 1).unwrap(), vec![1]).unwrap();
        assert_eq!(dyck_word_of(&ternary).unwrap_err(), Error::NotDoubleStaircase);
    }

    #[test]
    fn profile_examples() {
        assert_eq!(profile(&figure_perm()).unwrap().to_string(), "UUUDUUDUDDDD");
        assert_eq!(profile(&Permutation::identity(1)).unwrap().to_string(), "UD");
        assert_eq!(
            profile(&Permutation::new(vec![2, 1]).unwrap()).unwrap().to_string(),
            "UUDD"
        );
        assert_eq!(
            profile(&Permutation::new(vec![1, 2]).unwrap()).unwrap().to_string(),
            "UDUD"
        );
        assert_eq!(profile(&Permutation::identity(0)).unwrap_err(), Error::EmptyPermutation);
    }

    #[test]
    fn chain_running_example() {
        assert_eq!(rook_to_chain(&figure_placement()).unwrap(), figure_chain());
        assert_eq!(chain_to_rook(&figure_chain()).unwrap(), figure_placement());
        assert_eq!(perm_to_chain(&figure_perm()), figure_chain());
        assert_eq!(chain_to_perm(&figure_chain()), figure_perm());
    }

    #[test]
    fn chain_small_cases() {
        let empty = RookPlacement::new(StaircaseShape::double(0), vec![]).unwrap();
        let chain = rook_to_chain(&empty).unwrap();
        assert_eq!(chain.len(), 1);
        assert_eq!(chain.last().to_string(), "UD");
        assert_eq!(chain_to_rook(&chain).unwrap(), empty);

        let one = RookPlacement::new(StaircaseShape::double(1), vec![2]).unwrap();
        let words: Vec<_> = rook_to_chain(&one).unwrap().words().to_vec();
        assert_eq!(words[1].to_string(), "UDUD");

        let unit = DyckChain::new(vec![DyckWord::unit()]).unwrap();
        assert_eq!(chain_to_perm(&unit), Permutation::identity(1));
        let two = DyckChain::new(vec!["UD".parse().unwrap(), "UDUD".parse().unwrap()]).unwrap();
        assert_eq!(chain_to_perm(&two), Permutation::identity(2));
        assert_eq!(perm_to_chain(&Permutation::identity(0)).len(), 0);
        assert_eq!(chain_to_perm(&DyckChain::new(vec![]).unwrap()), Permutation::identity(0));
        assert_eq!(
            chain_to_rook(&DyckChain::new(vec![]).unwrap()).unwrap_err(),
            Error::EmptyChain
        );

        let chain21 = perm_to_chain(&Permutation::new(vec![2, 1]).unwrap());
        assert_eq!(chain21.last().to_string(), "UUDD");
    }

    #[test]
    fn projection_running_example() {
        let s = project(&figure_placement()).unwrap();
        assert_eq!(s.heights(), &[5, 5, 4, 3, 2]);
        assert_eq!(s.cols(), &[2, 3, 4, 1, 5]);
    }

    #[test]
    fn projection_small_cases() {
        let one = RookPlacement::new(StaircaseShape::double(1), vec![1]).unwrap();
        let s = project(&one).unwrap();
        assert_eq!((s.heights(), s.cols()), (&[1][..], &[1][..]));

        let full = RookPlacement::new(StaircaseShape::double(2), vec![1, 2]).unwrap();
        let s = project(&full).unwrap();
        assert_eq!((s.heights(), s.cols()), (&[2, 2][..], &[1, 2][..]));
    }

    #[test]
    fn lift_running_example() {
        let s = project(&figure_placement()).unwrap();
        let left = lift(&s, Side::Left).unwrap();
        assert_eq!(left.cols(), &[2, 3, 5, 1, 7]);
        assert_eq!(left.alignment(), Alignment::Left);
        assert_eq!(project(&left).unwrap(), s);

        let right = lift(&s, Side::Right).unwrap();
        assert_eq!(right.alignment(), Alignment::Right);
        assert_eq!(project(&right).unwrap(), s);
    }

    #[test]
    fn lift_small_cases() {
        let s = ProjectedPlacement::new(vec![1], vec![1]).unwrap();
        assert_eq!(lift(&s, Side::Left).unwrap().cols(), &[1]);
        assert_eq!(lift(&s, Side::Right).unwrap().cols(), &[2]);

        let full = ProjectedPlacement::new(vec![2, 2], vec![1, 2]).unwrap();
        assert_eq!(lift(&full, Side::Left).unwrap().cols(), &[1, 2]);
        assert_eq!(lift(&full, Side::Right).unwrap().cols(), &[1, 2]);

        let wide = ProjectedPlacement::new(vec![3, 3, 3], vec![1, 2, 3]).unwrap();
        assert_eq!(
            lift(&wide, Side::Left).unwrap_err(),
            Error::BlockTooWide { height: 3, size: 3 }
        );
    }

    #[test]
    fn fibre_sizes() {
        let s = project(&figure_placement()).unwrap();
        let fib = fibre(&s).unwrap();
        assert_eq!(fib.len(), 8);
        assert_eq!(fib[0], lift(&s, Side::Left).unwrap());
        assert_eq!(fib[7], lift(&s, Side::Right).unwrap());
        for r in &fib {
            assert_eq!(project(r).unwrap(), s);
        }

        let full = ProjectedPlacement::new(vec![2, 2], vec![1, 2]).unwrap();
        assert_eq!(fibre(&full).unwrap().len(), 1);
        let single = ProjectedPlacement::new(vec![1], vec![1]).unwrap();
        assert_eq!(fibre(&single).unwrap().len(), 2);
    }
}
