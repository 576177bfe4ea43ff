//! Free abelian groups on named curve classes modulo integer relations.
//!
//! Classes are reduced against a Hermite normal form of the relation
//! lattice, so two cycles are equivalent iff their reductions agree.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer coefficients over a group's class names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle(pub Vec<i64>);

impl Cycle {
    pub fn zero(n: usize) -> Self {
        Cycle(vec![0; n])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with nonnegative coefficients.
    pub fn is_effective(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn checked_add(&self, other: &Cycle) -> Result<Cycle> {
        if self.0.len() != other.0.len() {
            return Err(Error::ArityMismatch(self.0.len(), other.0.len()));
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("cycle sum")))
            .collect::<Result<Vec<_>>>()
            .map(Cycle)
    }
}

#[derive(Clone, Debug)]
pub struct CycleGroup {
    names: Vec<String>,
    aliases: Vec<(String, String)>,
    relations: Vec<Vec<i64>>,
    /// Echelon rows with positive pivots, entries above each pivot reduced
    /// into `[0, pivot)`.
    hnf: Vec<Vec<i64>>,
    pivots: Vec<usize>,
    /// Integer basis of the rational kernel of `hnf`; a cycle in the
    /// relation lattice pairs to zero with each of these.
    kernel: Vec<Vec<i64>>,
}

impl CycleGroup {
    pub fn new(names: Vec<String>, relations: Vec<Vec<i64>>) -> Result<Self> {
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        for r in &relations {
            if r.len() != names.len() {
                return Err(Error::ArityMismatch(r.len(), names.len()));
            }
        }
        let (hnf, pivots) = hermite(relations.clone(), names.len())?;
        let kernel = kernel_basis(&hnf, &pivots, names.len())?;
        Ok(CycleGroup {
            names,
            aliases: Vec::new(),
            relations,
            hnf,
            pivots,
            kernel,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[Vec<i64>] {
        &self.relations
    }

    pub fn hermite_rows(&self) -> &[Vec<i64>] {
        &self.hnf
    }

    /// Index of a class, resolving aliases.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        let name = self
            .aliases
            .iter()
            .find(|(a, _)| a == name)
            .map_or(name, |(_, target)| target.as_str());
        self.names.iter().position(|n| n == name)
    }

    fn check(&self, c: &Cycle) -> Result<()> {
        if c.0.len() == self.names.len() {
            Ok(())
        } else {
            Err(Error::ArityMismatch(c.0.len(), self.names.len()))
        }
    }

    /// Canonical representative of `c` modulo the relation lattice.
    pub fn reduce(&self, c: &Cycle) -> Result<Cycle> {
        self.check(c)?;
        let mut v = c.0.clone();
        for (row, &p) in self.hnf.iter().zip(&self.pivots) {
            let q = Integer::div_floor(&v[p], &row[p]);
            if q != 0 {
                sub_multiple(&mut v, row, q)?;
            }
        }
        Ok(Cycle(v))
    }

    pub fn is_zero(&self, c: &Cycle) -> Result<bool> {
        Ok(self.reduce(c)?.is_zero())
    }

    pub fn equivalent(&self, a: &Cycle, b: &Cycle) -> Result<bool> {
        Ok(self.reduce(a)? == self.reduce(b)?)
    }

    /// First nonzero effective cycle in `[0, bound]^n` (lexicographic, first
    /// class varying slowest) that vanishes in the quotient.
    pub fn search_effective_zero(&self, bound: u32) -> Result<Option<Cycle>> {
        if bound == 0 {
            return Err(Error::InvalidArgument("search bound must be positive".into()));
        }
        let n = self.names.len();
        let b = i64::from(bound);
        if n == 0 {
            return Ok(None);
        }
        let mut digits = vec![0i64; n];
        // pairing of the current digits with each kernel vector
        let mut pairing = vec![0i128; self.kernel.len()];
        loop {
            // odometer step: the last class varies fastest
            let mut k = n;
            loop {
                if k == 0 {
                    return Ok(None);
                }
                k -= 1;
                if digits[k] < b {
                    digits[k] += 1;
                    for (s, kv) in pairing.iter_mut().zip(&self.kernel) {
                        *s += i128::from(kv[k]);
                    }
                    break;
                }
                for (s, kv) in pairing.iter_mut().zip(&self.kernel) {
                    *s -= i128::from(kv[k]) * i128::from(b);
                }
                digits[k] = 0;
            }
            if pairing.iter().all(|&s| s == 0) {
                let c = Cycle(digits.clone());
                if self.is_zero(&c)? {
                    return Ok(Some(c));
                }
            }
        }
    }

    /// Parses `2 L23 + L1' - L13` (also `2*L23`) against the class names.
    pub fn parse_cycle(&self, src: &str) -> Result<Cycle> {
        let mut c = Cycle::zero(self.names.len());
        for (name, k) in parse_linear(src)? {
            let i = self
                .index_of(&name)
                .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            c.0[i] = c.0[i].checked_add(k).ok_or(Error::Overflow("cycle coefficient"))?;
        }
        Ok(c)
    }

    pub fn display<'a>(&'a self, c: &'a Cycle) -> CycleDisplay<'a> {
        CycleDisplay { group: self, cycle: c }
    }
}

pub struct CycleDisplay<'a> {
    group: &'a CycleGroup,
    cycle: &'a Cycle,
}

impl fmt::Display for CycleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, name) in self.cycle.0.iter().zip(&self.group.names) {
            if *k == 0 {
                continue;
            }
            let a = k.unsigned_abs();
            match (first, *k < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if a != 1 {
                write!(f, "{a} ")?;
            }
            f.write_str(name)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn sub_multiple(v: &mut [i64], row: &[i64], q: i64) -> Result<()> {
    for (x, r) in v.iter_mut().zip(row) {
        let d = r.checked_mul(q).ok_or(Error::Overflow("hermite form"))?;
        *x = x.checked_sub(d).ok_or(Error::Overflow("hermite form"))?;
    }
    Ok(())
}

#[allow(clippy::needless_range_loop)]
fn hermite(mut rows: Vec<Vec<i64>>, n: usize) -> Result<(Vec<Vec<i64>>, Vec<usize>)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        loop {
            let nonzero: Vec<usize> = (r..rows.len()).filter(|&i| rows[i][col] != 0).collect();
            let Some(&best) = nonzero.iter().min_by_key(|&&i| rows[i][col].unsigned_abs()) else {
                break;
            };
            rows.swap(r, best);
            if nonzero.len() == 1 {
                break;
            }
            let pivot_row = rows[r].clone();
            for i in r + 1..rows.len() {
                let q = rows[i][col] / pivot_row[col];
                if q != 0 {
                    sub_multiple(&mut rows[i], &pivot_row, q)?;
                }
            }
        }
        if r >= rows.len() || rows[r][col] == 0 {
            continue;
        }
        if rows[r][col] < 0 {
            for x in rows[r].iter_mut() {
                *x = x.checked_neg().ok_or(Error::Overflow("hermite form"))?;
            }
        }
        let pivot_row = rows[r].clone();
        for i in 0..r {
            let q = Integer::div_floor(&rows[i][col], &pivot_row[col]);
            if q != 0 {
                sub_multiple(&mut rows[i], &pivot_row, q)?;
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    Ok((rows, pivots))
}

/// Integer vectors spanning `{ x : H x = 0 }` over the rationals, one per
/// non-pivot column.
fn kernel_basis(hnf: &[Vec<i64>], pivots: &[usize], n: usize) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut x = vec![BigRational::zero(); n];
        x[free] = BigRational::one();
        for (row, &p) in hnf.iter().zip(pivots).rev() {
            let s: BigRational = (p + 1..n)
                .map(|j| BigRational::from_integer(row[j].into()) * &x[j])
                .sum();
            x[p] = -s / BigRational::from_integer(row[p].into());
        }
        let lcm = x
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let v = x
            .iter()
            .map(|q| {
                (q.numer() * (&lcm / q.denom()))
                    .to_i64()
                    .ok_or(Error::Overflow("kernel vector"))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(v);
    }
    Ok(out)
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// `[coef] [*] name` terms joined by `+` / `-`.
fn parse_linear(src: &str) -> Result<Vec<(String, i64)>> {
    let bad = |m: &str| Error::InvalidArgument(format!("{m} in `{}`", src.trim()));
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    let mut first = true;
    loop {
        skip_ws(&mut i);
        if i == chars.len() {
            if first {
                return Err(bad("empty linear combination"));
            }
            return Ok(out);
        }
        let mut sign = 1i64;
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -1;
            }
            i += 1;
            skip_ws(&mut i);
        } else if !first {
            return Err(bad("expected `+` or `-`"));
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let mut coef = 1i64;
        if i > start {
            let digits: String = chars[start..i].iter().collect();
            coef = digits.parse().map_err(|_| bad("coefficient too large"))?;
            skip_ws(&mut i);
            if i < chars.len() && chars[i] == '*' {
                i += 1;
                skip_ws(&mut i);
            }
        }
        let name_start = i;
        while i < chars.len() && is_name_char(chars[i]) {
            i += 1;
        }
        if name_start == i || !chars[name_start].is_ascii_alphabetic() {
            return Err(bad("expected a class name"));
        }
        let name: String = chars[name_start..i].iter().collect();
        out.push((name, sign * coef));
        first = false;
    }
}

/// What a scenario file claims about effective cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EffectiveZeroClaim {
    Expected,
    None,
}

/// A cycle group together with the claims a scenario file makes about it.
#[derive(Clone, Debug)]
pub struct CycleScenario {
    pub name: String,
    pub group: CycleGroup,
    /// `(source text, cycle)` pairs claimed to vanish.
    pub zero: Vec<(String, Cycle)>,
    pub nonzero: Vec<(String, Cycle)>,
    pub effective_zero: Option<EffectiveZeroClaim>,
}

/// Built-in scenarios by name.
pub const BUILTIN_SCENARIOS: [(&str, &str); 4] = [
    ("v0", include_str!("../data/cycles/v0.cyc")),
    ("v0-deformed", include_str!("../data/cycles/v0-deformed.cyc")),
    ("simple", include_str!("../data/cycles/simple.cyc")),
    ("two-point", include_str!("../data/cycles/two-point.cyc")),
];

pub fn builtin_scenario(name: &str) -> Option<Result<CycleScenario>> {
    BUILTIN_SCENARIOS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(n, src)| parse_scenario(n, src))
}

/// Parses the declarative scenario format:
///
/// ```text
/// # comment
/// classes: L1 L2 A B
/// alias: L31 = L13
/// L1 = A + B          relation; chains `a = b = c` give one relation per `=`
/// zero: A + C
/// nonzero: A
/// effective-zero: expected | none
/// ```
pub fn parse_scenario(name: &str, src: &str) -> Result<CycleScenario> {
    let mut names: Option<Vec<String>> = None;
    let mut aliases = Vec::new();
    let mut relation_lines: Vec<(usize, Vec<String>)> = Vec::new();
    let mut zero_lines = Vec::new();
    let mut nonzero_lines = Vec::new();
    let mut effective = None;
    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let err = |m: String| Error::CycleFormat {
            line: line_no,
            message: m,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, rest)) = line.split_once(':') {
            let rest = rest.trim();
            match key.trim() {
                "classes" => {
                    if names.is_some() {
                        return Err(err("duplicate classes line".into()));
                    }
                    let list: Vec<String> = rest
                        .split(|c: char| c.is_whitespace() || c == ',')
                        .filter(|s| !s.is_empty())
                        .map(str::to_string)
                        .collect();
                    if let Some(bad) = list.iter().find(|n| {
                        !n.chars().all(is_name_char) || !n.starts_with(|c: char| c.is_ascii_alphabetic())
                    }) {
                        return Err(err(format!("invalid class name `{bad}`")));
                    }
                    names = Some(list);
                }
                "alias" => {
                    let (a, b) = rest
                        .split_once('=')
                        .ok_or_else(|| err("alias needs `=`".into()))?;
                    aliases.push((a.trim().to_string(), b.trim().to_string(), line_no));
                }
                "zero" => zero_lines.push((line_no, rest.to_string())),
                "nonzero" => nonzero_lines.push((line_no, rest.to_string())),
                "effective-zero" => {
                    effective = Some(match rest {
                        "expected" => EffectiveZeroClaim::Expected,
                        "none" => EffectiveZeroClaim::None,
                        other => return Err(err(format!("unknown effective-zero claim `{other}`"))),
                    })
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
            continue;
        }
        let sides: Vec<String> = line.split('=').map(|s| s.trim().to_string()).collect();
        if sides.len() < 2 {
            return Err(err("expected a relation `lhs = rhs`".into()));
        }
        relation_lines.push((line_no, sides));
    }
    let names = names.ok_or(Error::CycleFormat {
        line: 0,
        message: "missing classes line".into(),
    })?;
    let mut group = CycleGroup::new(names.clone(), Vec::new())?;
    for (a, b, line) in &aliases {
        if group.index_of(b).is_none() || names.contains(a) {
            return Err(Error::CycleFormat {
                line: *line,
                message: format!("bad alias `{a} = {b}`"),
            });
        }
        group.aliases.push((a.clone(), b.clone()));
    }
    let at = |line: usize| {
        move |e: Error| Error::CycleFormat {
            line,
            message: e.to_string(),
        }
    };
    let mut relations = Vec::new();
    for (line, sides) in &relation_lines {
        let cycles = sides
            .iter()
            .map(|s| group.parse_cycle(s))
            .collect::<Result<Vec<_>>>()
            .map_err(at(*line))?;
        for w in cycles.windows(2) {
            let neg = Cycle(w[1].0.iter().map(|x| -x).collect());
            relations.push(w[0].checked_add(&neg).map_err(at(*line))?.0);
        }
    }
    let aliases_kept = group.aliases.clone();
    let mut group = CycleGroup::new(names, relations)?;
    group.aliases = aliases_kept;
    let claims = |lines: &[(usize, String)]| {
        lines
            .iter()
            .map(|(line, text)| {
                group
                    .parse_cycle(text)
                    .map(|c| (text.clone(), c))
                    .map_err(at(*line))
            })
            .collect::<Result<Vec<_>>>()
    };
    let zero = claims(&zero_lines)?;
    let nonzero = claims(&nonzero_lines)?;
    Ok(CycleScenario {
        name: name.to_string(),
        group,
        zero,
        nonzero,
        effective_zero: effective,
    })
}
