//! Small finite groups given by Cayley tables.
//!
//! `table[g][h]` is the index of the product `g·h`; the identity is index 0.
//! Permutations compose right to left: `(g·h)(x) = g(h(x))`.

use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl Group {
    /// Validates closure, identity at index 0, inverses and associativity.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, Error> {
        let n = labels.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter("Cayley table has the wrong shape".into()));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::InvalidParameter("Cayley table entry out of range".into()));
        }
        for g in 0..n {
            if table[0][g] != g || table[g][0] != g {
                return Err(Error::InvalidParameter("index 0 is not the identity".into()));
            }
            if !(0..n).any(|h| table[g][h] == 0) {
                return Err(Error::InvalidParameter(format!("element {g} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidParameter(format!(
                            "Cayley table is not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(Group {
            name: name.into(),
            labels,
            table,
        })
    }

    pub fn cyclic(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group order must be positive".into()));
        }
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            })
            .collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Group::from_table(format!("Z/{n}"), labels, table)
    }

    pub fn symmetric3() -> Self {
        // images of (0, 1, 2)
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|g| {
                perms
                    .iter()
                    .map(|h| index([g[h[0]], g[h[1]], g[h[2]]]))
                    .collect()
            })
            .collect();
        Group::from_table("S3", labels, table).unwrap()
    }

    /// `r^a s^b` at index `a + 4b`, with `s r s = r^{-1}`.
    pub fn dihedral4() -> Self {
        let labels = ["1", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let table = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (a, b) = (x % 4, x / 4);
                        let (c, d) = (y % 4, y / 4);
                        let rot = (if b == 0 { a + c } else { a + 4 - c }) % 4;
                        rot + 4 * ((b + d) % 2)
                    })
                    .collect()
            })
            .collect();
        Group::from_table("D4", labels, table).unwrap()
    }

    /// Labels `1, -1, i, -i, j, -j, k, -k`; `±u` sits at `2u + (sign bit)`.
    pub fn quaternion() -> Self {
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        // unit products: (sign, unit) for units 1, i, j, k
        let unit = |u: usize, v: usize| -> (bool, usize) {
            match (u, v) {
                (0, v) => (false, v),
                (u, 0) => (false, u),
                (u, v) if u == v => (true, 0),
                (1, 2) => (false, 3),
                (2, 3) => (false, 1),
                (3, 1) => (false, 2),
                (2, 1) => (true, 3),
                (3, 2) => (true, 1),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (neg, w) = unit(x / 2, y / 2);
                        let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
                        2 * w + sign
                    })
                    .collect()
            })
            .collect();
        Group::from_table("Q8", labels, table).unwrap()
    }

    pub fn klein() -> Self {
        let labels = ["1", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        Group::from_table("Z2xZ2", labels, table).unwrap()
    }

    /// `Z<n>`, `Z/<n>`, `S3`, `D4`, `Q8`, `Z2xZ2` (alias `V4`).
    pub fn by_name(name: &str) -> Result<Self, Error> {
        let trimmed = name.trim();
        match trimmed.to_ascii_uppercase().as_str() {
            "S3" => return Ok(Group::symmetric3()),
            "D4" => return Ok(Group::dihedral4()),
            "Q8" => return Ok(Group::quaternion()),
            "Z2XZ2" | "V4" | "KLEIN" => return Ok(Group::klein()),
            _ => {}
        }
        let digits = trimmed
            .strip_prefix("Z/")
            .or_else(|| trimmed.strip_prefix('Z'))
            .or_else(|| trimmed.strip_prefix('C'));
        if let Some(Ok(n)) = digits.map(str::parse::<usize>) {
            if (1..=64).contains(&n) {
                return Group::cyclic(n);
            }
        }
        Err(Error::InvalidParameter(format!("unknown group '{name}'")))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.table[g][h] == 0).unwrap()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}
