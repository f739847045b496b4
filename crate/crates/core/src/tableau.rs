//! Semistandard Young tableaux, Kostka numbers and Littlewood-Richardson
//! coefficients, all by direct backtracking over fillings.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewDiagram};

/// A filling of a skew diagram with positive integers.
///
/// `rows[i]` holds the entries of row `i` of the diagram, left to right,
/// skipping the cells of the inner partition.
#[derive(Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewDiagram,
    rows: Vec<Vec<usize>>,
}

/// Number of entries equal to each of `1, 2, …`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Content(pub Vec<usize>);

impl Content {
    /// The content as a partition, when it is weakly decreasing.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }
}

impl Tableau {
    /// Checks that `rows` fills `shape` exactly and is semistandard.
    pub fn new(shape: SkewDiagram, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::Domain(format!(
                "shape {shape} has {} rows, filling has {}",
                shape.num_rows(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let (lo, hi) = shape.row_span(i);
            if row.len() != hi - lo {
                return Err(Error::Domain(format!(
                    "row {} of {shape} has {} cells, filling has {}",
                    i + 1,
                    hi - lo,
                    row.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::Domain("entries must be positive".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Domain(format!("row {} is not weakly increasing", i + 1)));
            }
        }
        let t = Tableau { shape, rows };
        for (row, col) in t.shape.cells() {
            if row >= 2 && t.shape.contains_cell(row - 1, col)
                && t.entry(row - 1, col) >= t.entry(row, col) {
                    return Err(Error::Domain(format!(
                        "column {col} is not strictly increasing at row {row}"
                    )));
                }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewDiagram {
        &self.shape
    }

    /// Entry in the 1-based cell `(row, col)`; the cell must be in the shape.
    pub fn entry(&self, row: usize, col: usize) -> usize {
        let (lo, _) = self.shape.row_span(row - 1);
        self.rows[row - 1][col - lo - 1]
    }

    pub fn content(&self) -> Content {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &v in self.rows.iter().flatten() {
            counts[v - 1] += 1;
        }
        Content(counts)
    }

    /// Entries read right to left along each row, rows top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }

    /// Every prefix of the reading word has at least as many `i`s as `i+1`s.
    pub fn is_lattice(&self) -> bool {
        is_lattice_word(&self.reading_word())
    }
}

/// Prefix condition on a word: each prefix holds at least as many `i`s as
/// `(i+1)`s for every `i ≥ 1`.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in word {
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v > 1 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

impl fmt::Display for Tableau {
    /// One line per row; cells of the inner partition print as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let (lo, _) = self.shape.row_span(i);
            let cells = std::iter::repeat_n(".".to_string(), lo)
                .chain(row.iter().map(|v| v.to_string()));
            f.write_str(&cells.collect::<Vec<_>>().join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({}):\n{}", self.shape, self)
    }
}

/// Backtracking filler in row-major order with a fixed content.
struct ContentFiller<'a> {
    shape: &'a SkewDiagram,
    cells: Vec<(usize, usize)>,
    remaining: Vec<usize>,
    grid: Vec<Vec<usize>>,
}

impl<'a> ContentFiller<'a> {
    fn new(shape: &'a SkewDiagram, content: &[usize]) -> Self {
        let grid = (0..shape.num_rows())
            .map(|i| vec![0; shape.outer().part(i) + 1])
            .collect();
        ContentFiller {
            shape,
            cells: shape.cells().collect(),
            remaining: content.to_vec(),
            grid,
        }
    }

    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if k == self.cells.len() {
            visit(&self.grid);
            return;
        }
        let (row, col) = self.cells[k];
        let mut lower = 1;
        if self.shape.contains_cell(row, col - 1) {
            lower = lower.max(self.grid[row - 1][col - 1]);
        }
        if row >= 2 && self.shape.contains_cell(row - 1, col) {
            lower = lower.max(self.grid[row - 2][col] + 1);
        }
        for v in lower..=self.remaining.len() {
            if self.remaining[v - 1] == 0 {
                continue;
            }
            self.remaining[v - 1] -= 1;
            self.grid[row - 1][col] = v;
            self.run(k + 1, visit);
            self.remaining[v - 1] += 1;
        }
        self.grid[row - 1][col] = 0;
    }
}

fn grid_to_rows(shape: &SkewDiagram, grid: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..shape.num_rows())
        .map(|i| {
            let (lo, hi) = shape.row_span(i);
            grid[i][lo + 1..=hi].to_vec()
        })
        .collect()
}

/// Calls `visit` on every SSYT of `shape` whose content is `content`
/// (`content[i]` copies of `i + 1`).
pub fn for_each_ssyt(shape: &SkewDiagram, content: &[usize], mut visit: impl FnMut(&Tableau)) {
    if content.iter().sum::<usize>() != shape.size() {
        return;
    }
    let mut filler = ContentFiller::new(shape, content);
    filler.run(0, &mut |grid| {
        let t = Tableau {
            shape: shape.clone(),
            rows: grid_to_rows(shape, grid),
        };
        visit(&t);
    });
}

/// Number of SSYT of the given shape and content.
pub fn kostka(shape: &SkewDiagram, content: &Partition) -> Result<u64> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch {
            shape: shape.size(),
            content: content.size(),
        });
    }
    let mut count = 0u64;
    let mut filler = ContentFiller::new(shape, content.parts());
    filler.run(0, &mut |_| count += 1);
    Ok(count)
}

/// Number of standard fillings: content `(1^n)`.
pub fn standard_count(shape: &SkewDiagram) -> u64 {
    kostka(shape, &Partition::column(shape.size())).expect("sizes agree")
}

/// Littlewood-Richardson expansion `s_D = Σ_ν c_{Dν} s_ν`.
///
/// Fills the cells in reading order (rows top to bottom, each row right to
/// left) so the lattice condition can be enforced on every prefix. The
/// content of a lattice word is always a partition.
pub fn lr_expand(shape: &SkewDiagram) -> BTreeMap<Partition, u64> {
    struct Lr<'a> {
        shape: &'a SkewDiagram,
        cells: Vec<(usize, usize)>,
        grid: Vec<Vec<usize>>,
        counts: Vec<usize>,
        out: BTreeMap<Partition, u64>,
    }

    impl Lr<'_> {
        fn run(&mut self, k: usize) {
            if k == self.cells.len() {
                let content = Partition::from_unsorted(self.counts.clone());
                *self.out.entry(content).or_insert(0) += 1;
                return;
            }
            let (row, col) = self.cells[k];
            let mut lower = 1;
            if row >= 2 && self.shape.contains_cell(row - 1, col) {
                lower = self.grid[row - 2][col] + 1;
            }
            let upper = if self.shape.contains_cell(row, col + 1) {
                self.grid[row - 1][col + 1]
            } else {
                self.counts.len() + 1
            };
            for v in lower..=upper {
                if v > 1 && self.counts[v - 2] <= self.count(v) {
                    continue;
                }
                if v > self.counts.len() {
                    self.counts.push(0);
                }
                self.counts[v - 1] += 1;
                self.grid[row - 1][col] = v;
                self.run(k + 1);
                self.counts[v - 1] -= 1;
                if self.counts[v - 1] == 0 && v == self.counts.len() {
                    self.counts.pop();
                }
            }
        }

        fn count(&self, v: usize) -> usize {
            self.counts.get(v - 1).copied().unwrap_or(0)
        }
    }

    let cells: Vec<(usize, usize)> = (0..shape.num_rows())
        .flat_map(|i| {
            let (lo, hi) = shape.row_span(i);
            (lo + 1..=hi).rev().map(move |j| (i + 1, j))
        })
        .collect();
    let mut lr = Lr {
        shape,
        cells,
        grid: (0..shape.num_rows())
            .map(|i| vec![0; shape.outer().part(i) + 2])
            .collect(),
        counts: Vec::new(),
        out: BTreeMap::new(),
    };
    lr.run(0);
    lr.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn skew(s: &str) -> SkewDiagram {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Every filling with entries in `1..=max`, kept if semistandard.
    fn brute_force_ssyt(shape: &SkewDiagram, max: usize) -> Vec<Tableau> {
        let cells: Vec<_> = shape.cells().collect();
        let mut out = Vec::new();
        let mut values = vec![1; cells.len()];
        loop {
            let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.num_rows()];
            for (&(r, _), &v) in cells.iter().zip(&values) {
                rows[r - 1].push(v);
            }
            if let Ok(t) = Tableau::new(shape.clone(), rows) {
                out.push(t);
            }
            let mut k = 0;
            loop {
                if k == values.len() {
                    return out;
                }
                values[k] += 1;
                if values[k] <= max {
                    break;
                }
                values[k] = 1;
                k += 1;
            }
        }
    }

    #[test]
    fn kostka_agrees_with_brute_force() {
        for shape in ["[2,1]", "[3,1]/[1]", "[2,2]/[1]", "[3,2]", "[2,2,1]/[1]"] {
            let d = skew(shape);
            let n = d.size();
            let all = brute_force_ssyt(&d, n);
            for mu in partitions_of(n) {
                let expected = all
                    .iter()
                    .filter(|t| t.content().0 == mu.parts())
                    .count() as u64;
                assert_eq!(kostka(&d, &mu).unwrap(), expected, "{d} {mu}");
            }
        }
        assert_eq!(kostka(&skew("[2,1]"), &part("[1,1,1]")).unwrap(), 2);
    }

    #[test]
    fn kostka_diagonal_and_errors() {
        for lambda in partitions_of(6) {
            assert_eq!(kostka(&SkewDiagram::straight(lambda.clone()), &lambda).unwrap(), 1);
        }
        assert!(matches!(
            kostka(&skew("[2,1]"), &part("[2]")),
            Err(Error::SizeMismatch { shape: 3, content: 2 })
        ));
    }

    #[test]
    fn example_tableau() {
        let d = skew("[6,4,4,1]/[3,2]");
        let t = Tableau::new(
            d.clone(),
            vec![vec![1, 1, 1], vec![1, 2], vec![1, 2, 2, 3], vec![4]],
        )
        .unwrap();
        assert_eq!(t.content(), Content(vec![5, 3, 1, 1]));
        assert!(t.is_lattice());
        assert_eq!(t.to_string(), ". . . 1 1 1\n. . 1 2\n1 2 2 3\n4");
        assert!(kostka(&d, &part("[5,3,1,1]")).unwrap() >= 1);
    }

    #[test]
    fn lattice_words() {
        let single = Tableau::new(skew("[1]"), vec![vec![1]]).unwrap();
        assert!(single.is_lattice());
        let t = Tableau::new(skew("[1,1]"), vec![vec![2], vec![3]]).unwrap();
        assert!(!t.is_lattice());
    }

    #[test]
    fn rejects_bad_fillings() {
        assert!(Tableau::new(skew("[2]"), vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(skew("[1,1]"), vec![vec![1], vec![1]]).is_err());
        assert!(Tableau::new(skew("[2]"), vec![vec![1]]).is_err());
    }

    #[test]
    fn lr_small_cases() {
        let straight = lr_expand(&skew("[3,2,1]"));
        assert_eq!(straight, BTreeMap::from([(part("[3,2,1]"), 1)]));
        assert_eq!(
            lr_expand(&skew("[2,1]/[1]")),
            BTreeMap::from([(part("[2]"), 1), (part("[1,1]"), 1)])
        );
        assert_eq!(
            lr_expand(&skew("[2,2]/[1]")),
            BTreeMap::from([(part("[2,1]"), 1)])
        );
    }

    #[test]
    fn lr_agrees_with_brute_force_lattice_count() {
        for shape in ["[3,2,1]/[2,1]", "[3,3]/[1]", "[4,2,1]/[2]", "[2,2,2]/[1,1]"] {
            let d = skew(shape);
            let n = d.size();
            let mut expected: BTreeMap<Partition, u64> = BTreeMap::new();
            for t in brute_force_ssyt(&d, n) {
                if t.is_lattice() {
                    let p = t.content().as_partition().unwrap();
                    *expected.entry(p).or_insert(0) += 1;
                }
            }
            assert_eq!(lr_expand(&d), expected, "{d}");
        }
    }

    #[test]
    fn enumerated_tableaux_are_valid() {
        let d = skew("[4,3,1]/[2]");
        let mut n = 0;
        for_each_ssyt(&d, &[2, 2, 2], |t| {
            n += 1;
            assert_eq!(t.content(), Content(vec![2, 2, 2]));
            Tableau::new(t.shape().clone(), t.rows.clone()).unwrap();
        });
        assert_eq!(n as u64, kostka(&d, &part("[2,2,2]")).unwrap());
    }
}
