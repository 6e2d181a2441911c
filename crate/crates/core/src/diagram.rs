//! Weight diagrams: the vertices `0, 1, 2, …` decorated with `×`, `<`, `>` (empty
//! otherwise), a stack of `×`'s plus an optional `⊥` at vertex 0, the distance and
//! length functions, rendering, and the reduction `λ ↦ λ_red`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::weight::Weight;

/// Vertex label of a diagram (vertices `≥ 1`; absent means empty).
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Symbol {
    /// Both `v` and `−v` occur.
    Cross,
    /// Only `v` occurs.
    Right,
    /// Only `−v` occurs.
    Left,
}

impl Symbol {
    pub fn as_str(self) -> &'static str {
        match self {
            Symbol::Cross => "x",
            Symbol::Right => ">",
            Symbol::Left => "<",
        }
    }

    pub fn parse(s: &str) -> Option<Symbol> {
        match s {
            "x" | "×" => Some(Symbol::Cross),
            ">" => Some(Symbol::Right),
            "<" => Some(Symbol::Left),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DiagramError {
    NotDominant,
    /// The symbols need more entries than the requested rank provides.
    TooSmall {
        needed: usize,
        n: usize,
    },
}

/// Weight diagram of a dominant weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDiagram {
    /// Number of `×`'s stacked at vertex 0.
    pub zero_cross: usize,
    /// Whether a `⊥` sits at vertex 0.
    pub bot: bool,
    /// Symbols at vertices `≥ 1`; every other vertex is empty.
    pub symbols: BTreeMap<i64, Symbol>,
}

impl WeightDiagram {
    pub fn from_weight(lambda: &Weight) -> Result<Self, DiagramError> {
        if !lambda.is_dominant() {
            return Err(DiagramError::NotDominant);
        }
        let z = lambda.z();
        let mut symbols = BTreeMap::new();
        for &v in lambda.entries() {
            if v > 0 {
                symbols.insert(v, Symbol::Right);
            }
        }
        for &v in lambda.entries() {
            if v < 0 {
                let s = match symbols.get(&-v) {
                    Some(Symbol::Right) => Symbol::Cross,
                    _ => Symbol::Left,
                };
                symbols.insert(-v, s);
            }
        }
        Ok(WeightDiagram {
            zero_cross: z / 2,
            bot: z % 2 == 1,
            symbols,
        })
    }

    /// Entries needed to encode this diagram.
    pub fn min_rank(&self) -> usize {
        let body: usize = self
            .symbols
            .values()
            .map(|s| if *s == Symbol::Cross { 2 } else { 1 })
            .sum();
        body + 2 * self.zero_cross + usize::from(self.bot)
    }

    /// Decodes the dominant weight of length `n`; extra length is padded with pairs of
    /// zeros, i.e. further `×`'s at vertex 0.
    pub fn to_weight(&self, n: usize) -> Result<Weight, DiagramError> {
        let needed = self.min_rank();
        if needed > n || (n - needed) % 2 == 1 {
            return Err(DiagramError::TooSmall { needed, n });
        }
        let mut vals = Vec::with_capacity(n);
        for (&v, s) in &self.symbols {
            match s {
                Symbol::Cross => {
                    vals.push(v);
                    vals.push(-v);
                }
                Symbol::Right => vals.push(v),
                Symbol::Left => vals.push(-v),
            }
        }
        vals.resize(n, 0);
        vals.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Weight(vals))
    }

    /// Vertices of the `×`'s, numbered from vertex 0 first and then left to right.
    pub fn crosses(&self) -> Vec<i64> {
        let mut xs = alloc::vec![0; self.zero_cross];
        xs.extend(
            self.symbols
                .iter()
                .filter(|(_, s)| **s == Symbol::Cross)
                .map(|(v, _)| *v),
        );
        xs
    }

    /// Atypicality degree.
    pub fn degree(&self) -> usize {
        self.zero_cross
            + self
                .symbols
                .values()
                .filter(|s| **s == Symbol::Cross)
                .count()
    }

    pub fn is_empty_vertex(&self, v: i64) -> bool {
        v > 0 && !self.symbols.contains_key(&v)
    }

    /// `#∅ − #×` strictly between `s` and `t`, for `0 ≤ s ≤ t`.
    pub fn distance(&self, s: i64, t: i64) -> i64 {
        assert!(0 <= s && s <= t, "distance needs 0 <= s <= t");
        let mut empty = (t - s - 1).max(0);
        let mut cross = 0;
        for (_, sym) in self.symbols.range(s + 1..t) {
            empty -= 1;
            if *sym == Symbol::Cross {
                cross += 1;
            }
        }
        empty - cross
    }

    /// Length `ℓ(i, t)` for cross index `0 ≤ i ≤ r` (index 0 is the imaginary `×` at
    /// vertex 0) and vertex `t ≥ 1`.
    pub fn length(&self, i: usize, t: i64) -> i64 {
        let xs = self.crosses();
        assert!(i <= xs.len(), "cross index out of range");
        let xi = if i == 0 { 0 } else { xs[i - 1] };
        if xi > 0 {
            self.distance(xi, t)
        } else {
            self.distance(0, t) - 2 * (self.zero_cross as i64 - i as i64) - i64::from(self.bot)
        }
    }

    /// Largest vertex carrying a symbol (0 if none).
    pub fn watermark(&self) -> i64 {
        self.symbols.keys().next_back().copied().unwrap_or(0)
    }

    /// Text rendering: a symbol row, a row of `×` labels, and the vertex numbers.
    /// Vertex 0 shows its stack as e.g. `xx⊥`; empty vertices show `.`.
    pub fn render(&self) -> String {
        let top = self.watermark();
        let xs = self.crosses();
        let mut sym_row = Vec::new();
        let mut lab_row = Vec::new();
        let mut num_row = Vec::new();
        let mut zero = String::new();
        for _ in 0..self.zero_cross {
            zero.push('x');
        }
        if self.bot {
            zero.push('⊥');
        }
        if zero.is_empty() {
            zero.push('.');
        }
        sym_row.push(zero);
        let zero_labels: Vec<String> = (1..=self.zero_cross).map(|i| format!("{i}")).collect();
        lab_row.push(if zero_labels.is_empty() {
            String::new()
        } else {
            zero_labels.join(",")
        });
        num_row.push(String::from("0"));
        for v in 1..=top {
            let s = self.symbols.get(&v);
            sym_row.push(String::from(s.map_or(".", |s| s.as_str())));
            let label = match s {
                Some(Symbol::Cross) => {
                    let idx = xs.iter().position(|&x| x == v).map_or(0, |p| p + 1);
                    format!("{idx}")
                }
                _ => String::new(),
            };
            lab_row.push(label);
            num_row.push(format!("{v}"));
        }
        let width = sym_row
            .iter()
            .chain(&lab_row)
            .chain(&num_row)
            .map(|c| c.chars().count())
            .max()
            .unwrap_or(1)
            + 1;
        let mut out = String::new();
        for row in [&sym_row, &lab_row, &num_row] {
            let mut line = String::new();
            for cell in row.iter() {
                let pad = width - cell.chars().count();
                for _ in 0..pad {
                    line.push(' ');
                }
                line.push_str(cell);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// `λ_red`: delete every `<`/`>` vertex, relabel the rest consecutively and decode
/// with `2r + z̄` entries.
pub fn reduce(lambda: &Weight) -> Result<Weight, DiagramError> {
    let d = WeightDiagram::from_weight(lambda)?;
    Ok(reduce_diagram(&d)
        .to_weight(2 * d.degree() + usize::from(d.bot))
        .expect("reduced rank fits"))
}

/// The relabeling map of the reduction: vertex `v` of a cross goes to `v − #{< or > below v}`.
pub fn reduce_vertex(d: &WeightDiagram, v: i64) -> i64 {
    v - d
        .symbols
        .range(1..v)
        .filter(|(_, s)| **s != Symbol::Cross)
        .count() as i64
}

pub fn reduce_diagram(d: &WeightDiagram) -> WeightDiagram {
    let symbols = d
        .symbols
        .iter()
        .filter(|(_, s)| **s == Symbol::Cross)
        .map(|(&v, &s)| (reduce_vertex(d, v), s))
        .collect();
    WeightDiagram {
        zero_cross: d.zero_cross,
        bot: d.bot,
        symbols,
    }
}
