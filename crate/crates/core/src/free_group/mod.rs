//! Free-group words, homomorphisms, and Stallings folding.
//!
//! Generators are 1-based: the letter `k` is the k-th generator and `-k` its
//! inverse; `0` is invalid. Words are kept freely reduced.

mod folding;

pub use folding::{fold, FoldedEdge, FoldedGraph};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter 0 is invalid (generators are 1-based)")]
    ZeroLetter,
    #[error("letter {letter} outside rank-{rank} alphabet")]
    LetterOutOfRange { letter: i32, rank: usize },
    #[error("word over rank {found} used where rank {expected} is required")]
    RankMismatch { expected: usize, found: usize },
    #[error("homomorphism must provide {expected} images, found {found}")]
    ImageCountMismatch { expected: usize, found: usize },
}

/// A freely reduced word in a free group of a given rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<i32>,
}

impl Word {
    /// Reduces a raw letter sequence: deletes adjacent `g g^-1` pairs until
    /// none remain.
    pub fn reduce(rank: usize, letters: &[i32]) -> Result<Word, WordError> {
        let mut stack: Vec<i32> = Vec::with_capacity(letters.len());
        for &l in letters {
            if l == 0 {
                return Err(WordError::ZeroLetter);
            }
            if l.unsigned_abs() as usize > rank {
                return Err(WordError::LetterOutOfRange { letter: l, rank });
            }
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Ok(Word {
            rank,
            letters: stack,
        })
    }

    pub fn empty(rank: usize) -> Word {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, index: usize) -> Word {
        assert!(index >= 1 && index <= rank);
        Word {
            rank,
            letters: vec![index as i32],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.rank != other.rank {
            return Err(WordError::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::reduce(self.rank, &letters)
    }
}

/// A homomorphism `F(n) -> F(m)` given by the images of the `n` generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeHom {
    domain_rank: usize,
    codomain_rank: usize,
    images: Vec<Word>,
}

impl FreeHom {
    pub fn new(
        domain_rank: usize,
        codomain_rank: usize,
        images: Vec<Word>,
    ) -> Result<FreeHom, WordError> {
        if images.len() != domain_rank {
            return Err(WordError::ImageCountMismatch {
                expected: domain_rank,
                found: images.len(),
            });
        }
        for w in &images {
            if w.rank() != codomain_rank {
                return Err(WordError::RankMismatch {
                    expected: codomain_rank,
                    found: w.rank(),
                });
            }
        }
        Ok(FreeHom {
            domain_rank,
            codomain_rank,
            images,
        })
    }

    pub fn from_letters(
        domain_rank: usize,
        codomain_rank: usize,
        images: &[Vec<i32>],
    ) -> Result<FreeHom, WordError> {
        let words = images
            .iter()
            .map(|w| Word::reduce(codomain_rank, w))
            .collect::<Result<Vec<_>, _>>()?;
        FreeHom::new(domain_rank, codomain_rank, words)
    }

    pub fn identity(rank: usize) -> FreeHom {
        FreeHom {
            domain_rank: rank,
            codomain_rank: rank,
            images: (1..=rank).map(|i| Word::generator(rank, i)).collect(),
        }
    }

    pub fn trivial(domain_rank: usize, codomain_rank: usize) -> FreeHom {
        FreeHom {
            domain_rank,
            codomain_rank,
            images: vec![Word::empty(codomain_rank); domain_rank],
        }
    }

    pub fn domain_rank(&self) -> usize {
        self.domain_rank
    }

    pub fn codomain_rank(&self) -> usize {
        self.codomain_rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(Word::is_empty)
    }

    /// Applies the homomorphism to a word over the domain generators.
    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        if w.rank() != self.domain_rank {
            return Err(WordError::RankMismatch {
                expected: self.domain_rank,
                found: w.rank(),
            });
        }
        let mut letters = Vec::new();
        for &l in w.letters() {
            let image = &self.images[(l.unsigned_abs() as usize) - 1];
            if l > 0 {
                letters.extend_from_slice(image.letters());
            } else {
                letters.extend(image.letters().iter().rev().map(|x| -x));
            }
        }
        Word::reduce(self.codomain_rank, &letters)
    }

    /// Rank of the image subgroup, read off the folded core graph.
    pub fn image_rank(&self) -> usize {
        fold(self).rank()
    }
}

/// TC of a free-group homomorphism: 0 for the trivial map, 1 when the image
/// is infinite cyclic, 2 otherwise.
pub fn tc_free_hom(f: &FreeHom) -> u32 {
    match f.image_rank() {
        0 => 0,
        1 => 1,
        _ => 2,
    }
}

/// LS-category of a free-group homomorphism: 0 exactly for the trivial map,
/// otherwise 1 (the category of any nontrivial map out of a graph-like space
/// is pinched between 1 and the category of the codomain, which is 1).
pub fn cat_free_hom(f: &FreeHom) -> u32 {
    if f.is_trivial() {
        0
    } else {
        1
    }
}

/// JSON schema `{"domain_rank": n, "codomain_rank": m, "images": [[...]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FreeHomSchema {
    pub domain_rank: usize,
    pub codomain_rank: usize,
    pub images: Vec<Vec<i32>>,
}

impl FreeHomSchema {
    pub fn to_hom(&self) -> Result<FreeHom, WordError> {
        FreeHom::from_letters(self.domain_rank, self.codomain_rank, &self.images)
    }
}

impl From<&FreeHom> for FreeHomSchema {
    fn from(f: &FreeHom) -> Self {
        FreeHomSchema {
            domain_rank: f.domain_rank,
            codomain_rank: f.codomain_rank,
            images: f.images.iter().map(|w| w.letters().to_vec()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_cancels() {
        assert!(Word::reduce(2, &[1, -1]).unwrap().is_empty());
        assert_eq!(Word::reduce(2, &[1, 2, -2, 1]).unwrap().letters(), &[1, 1]);
    }

    #[test]
    fn reduce_rejects_bad_letters() {
        assert_eq!(Word::reduce(2, &[0]), Err(WordError::ZeroLetter));
        assert_eq!(
            Word::reduce(2, &[3]),
            Err(WordError::LetterOutOfRange { letter: 3, rank: 2 })
        );
        assert_eq!(
            Word::reduce(2, &[-3]),
            Err(WordError::LetterOutOfRange {
                letter: -3,
                rank: 2
            })
        );
    }

    #[test]
    fn word_times_inverse_is_trivial() {
        let w = Word::reduce(3, &[1, 2, -3, 2, 2]).unwrap();
        assert!(w.concat(&w.inverse()).unwrap().is_empty());
    }

    #[test]
    fn apply_identity() {
        let f = FreeHom::identity(2);
        let w = Word::reduce(2, &[1, -2, 1]).unwrap();
        assert_eq!(f.apply(&w).unwrap(), w);
    }

    #[test]
    fn apply_collapses() {
        // a -> x, b -> x applied to a b^-1 gives the empty word.
        let f = FreeHom::from_letters(2, 1, &[vec![1], vec![1]]).unwrap();
        let w = Word::reduce(2, &[1, -2]).unwrap();
        assert!(f.apply(&w).unwrap().is_empty());
    }

    #[test]
    fn apply_power_words() {
        // a -> x^2, b -> x^3 applied to a^-1 b gives x.
        let f = FreeHom::from_letters(2, 1, &[vec![1, 1], vec![1, 1, 1]]).unwrap();
        let w = Word::reduce(2, &[-1, 2]).unwrap();
        assert_eq!(f.apply(&w).unwrap().letters(), &[1]);
    }

    #[test]
    fn classification_values() {
        let trivial = FreeHom::trivial(2, 2);
        assert_eq!(tc_free_hom(&trivial), 0);
        assert_eq!(cat_free_hom(&trivial), 0);

        let collapse = FreeHom::from_letters(2, 1, &[vec![1], vec![1]]).unwrap();
        assert_eq!(tc_free_hom(&collapse), 1);
        assert_eq!(cat_free_hom(&collapse), 1);

        let powers = FreeHom::from_letters(2, 1, &[vec![1, 1], vec![1, 1, 1]]).unwrap();
        assert_eq!(tc_free_hom(&powers), 1);

        let identity = FreeHom::identity(2);
        assert_eq!(tc_free_hom(&identity), 2);
        assert_eq!(cat_free_hom(&identity), 1);

        let basis = FreeHom::from_letters(2, 2, &[vec![1], vec![2]]).unwrap();
        assert_eq!(tc_free_hom(&basis), 2);
    }

    #[test]
    fn tc_zero_iff_cat_zero() {
        let homs = [
            FreeHom::trivial(3, 2),
            FreeHom::identity(2),
            FreeHom::from_letters(2, 1, &[vec![1], vec![]]).unwrap(),
        ];
        for f in &homs {
            assert_eq!(tc_free_hom(f) == 0, cat_free_hom(f) == 0);
        }
    }

    #[test]
    fn schema_round_trip() {
        let f = FreeHom::from_letters(2, 2, &[vec![1, 2], vec![-1]]).unwrap();
        let schema = FreeHomSchema::from(&f);
        let text = serde_json::to_string(&schema).unwrap();
        let back: FreeHomSchema = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_hom().unwrap(), f);
    }
}
