//! Exact character theory of the symmetric groups.
//!
//! Character values come from the Murnaghan–Nakayama rule evaluated on beta
//! sets (first-column hook lengths). Tables are built once per `n`, shared
//! through a process-wide [`TableStore`], and optionally persisted as JSON.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::vchar::VirtualCharacter;

/// Largest `n` for which full character tables are built.
pub const MAX_TABLE_N: usize = 20;

pub const CACHE_FORMAT_VERSION: u32 = 1;

/// A conjugacy class of `S_n`, named by its cycle lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn partition(&self) -> &Partition {
        &self.0
    }

    /// `(-1)^(n - number of cycles)`.
    pub fn sign(&self) -> i64 {
        if (self.0.size() - self.0.length()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        CycleType(p)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Centralizer order `z_t = Π i^{m_i} m_i!`.
pub fn centralizer_order(t: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let parts = t.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let mult = j - i;
        z *= BigUint::from(parts[i]).pow(mult as u32) * factorial(mult);
        i = j;
    }
    z
}

/// `n! / z_t`, the number of permutations with cycle type `t`.
pub fn class_size(t: &Partition) -> BigUint {
    factorial(t.size()) / centralizer_order(t)
}

/// Hook length formula.
pub fn degree(lambda: &Partition) -> BigUint {
    let hooks: BigUint = lambda
        .hook_lengths()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    factorial(lambda.size()) / hooks
}

type MnKey = (Vec<usize>, Vec<usize>);

thread_local! {
    static MN_MEMO: RefCell<HashMap<MnKey, i64>> = RefCell::new(HashMap::new());
}

/// `χ^λ(t)` by recursive rim-hook removal, memoized per thread on
/// `(partition, remaining cycles)`.
pub fn mn_character_value(lambda: &Partition, t: &Partition) -> Result<i64> {
    if lambda.size() != t.size() {
        return Err(Error::size_mismatch(lambda.size(), t.size()));
    }
    MN_MEMO.with(|memo| mn_value(lambda.parts(), t.parts(), &mut memo.borrow_mut()))
}

fn mn_value(lambda: &[usize], cycles: &[usize], memo: &mut HashMap<MnKey, i64>) -> Result<i64> {
    let Some((&k, rest)) = cycles.split_first() else {
        return Ok(1);
    };
    if lambda.len() <= 1 || lambda[0] == 1 {
        // one row: trivial character; one column: sign character
        let sign = if lambda.len() <= 1 {
            1
        } else {
            let even = cycles.iter().filter(|&&c| c % 2 == 0).count();
            if even % 2 == 0 { 1 } else { -1 }
        };
        return Ok(sign);
    }
    let key = (lambda.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return Ok(v);
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total: i64 = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        // betas strictly between target and b give the leg length
        let leg = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let smaller = beta_to_partition(&next);
        let v = mn_value(&smaller, rest, memo)?;
        let term = if leg % 2 == 0 { v } else { -v };
        total = total
            .checked_add(term)
            .ok_or(Error::Overflow("Murnaghan-Nakayama sum"))?;
    }
    memo.insert(key, total);
    Ok(total)
}

fn beta_to_partition(beta: &[usize]) -> Vec<usize> {
    let len = beta.len();
    let mut parts: Vec<usize> = beta.iter().enumerate().map(|(i, &b)| b + i + 1 - len).collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// Exact integer values on the classes of `S_n`, in the table's class order
/// (decreasing lexicographic).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    pub n: usize,
    pub values: Vec<i128>,
}

impl ClassFunction {
    /// Pointwise product.
    pub fn product(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(Error::size_mismatch(self.n, other.n));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.checked_mul(*b).ok_or(Error::Overflow("class function product")))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(Error::size_mismatch(self.n, other.n));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("class function sum")))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { n: self.n, values })
    }
}

/// Full character table of `S_n`: rows labelled by irreducibles, columns by
/// cycle types, both in decreasing lexicographic order.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    labels: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
    class_sizes: Vec<BigUint>,
    order: BigUint,
    // i128 copies of class sizes and n!, present when they fit
    fast_sizes: Option<(Vec<i128>, i128)>,
}

impl CharacterTable {
    pub fn compute(n: usize) -> Result<Self> {
        if n > MAX_TABLE_N {
            return Err(Error::OutOfRange {
                what: "character table degree",
                value: n,
                min: 0,
                max: MAX_TABLE_N,
            });
        }
        let labels = partitions_of(n);
        let mut values = Vec::with_capacity(labels.len());
        for lambda in &labels {
            let row = labels
                .iter()
                .map(|t| mn_character_value(lambda, t))
                .collect::<Result<Vec<_>>>()?;
            values.push(row);
        }
        Ok(Self::from_parts(n, labels, values))
    }

    fn from_parts(n: usize, labels: Vec<Partition>, values: Vec<Vec<i64>>) -> Self {
        let class_sizes: Vec<BigUint> = labels.iter().map(class_size).collect();
        let order = factorial(n);
        let fast_sizes = class_sizes
            .iter()
            .map(|s| s.to_i128())
            .collect::<Option<Vec<_>>>()
            .zip(order.to_i128());
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        CharacterTable {
            n,
            labels,
            index,
            values,
            class_sizes,
            order,
            fast_sizes,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row labels, which are also the column (class) labels.
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn classes(&self) -> &[Partition] {
        &self.labels
    }

    pub fn class_sizes(&self) -> &[BigUint] {
        &self.class_sizes
    }

    pub fn index_of(&self, lambda: &Partition) -> Result<usize> {
        self.index
            .get(lambda)
            .copied()
            .ok_or_else(|| Error::size_mismatch(lambda.size(), self.n))
    }

    pub fn value(&self, lambda: &Partition, t: &Partition) -> Result<i64> {
        Ok(self.values[self.index_of(lambda)?][self.index_of(t)?])
    }

    pub fn row_values(&self, i: usize) -> &[i64] {
        &self.values[i]
    }

    pub fn character(&self, lambda: &Partition) -> Result<ClassFunction> {
        let row = &self.values[self.index_of(lambda)?];
        Ok(ClassFunction {
            n: self.n,
            values: row.iter().map(|&v| v as i128).collect(),
        })
    }

    /// Class function of a virtual character of `S_n`.
    pub fn class_function(&self, psi: &VirtualCharacter) -> Result<ClassFunction> {
        if psi.n() != self.n {
            return Err(Error::size_mismatch(psi.n(), self.n));
        }
        let mut values = vec![0i128; self.labels.len()];
        for (lambda, c) in psi.iter() {
            let row = &self.values[self.index_of(lambda)?];
            for (acc, &v) in values.iter_mut().zip(row) {
                *acc = (v as i128)
                    .checked_mul(c as i128)
                    .and_then(|x| acc.checked_add(x))
                    .ok_or(Error::Overflow("class function"))?;
            }
        }
        Ok(ClassFunction { n: self.n, values })
    }

    /// `(1/n!) Σ_t |t| f(t) g(t)`, with exact divisibility asserted.
    pub fn inner_product(&self, f: &ClassFunction, g: &ClassFunction) -> Result<i64> {
        if f.n != self.n {
            return Err(Error::size_mismatch(f.n, self.n));
        }
        if g.n != self.n {
            return Err(Error::size_mismatch(g.n, self.n));
        }
        self.weighted_sum(|i| f.values[i].checked_mul(g.values[i]), |i| {
            BigInt::from(f.values[i]) * BigInt::from(g.values[i])
        })
    }

    /// `⟨f·g, h⟩` without materializing the product.
    pub fn triple_product(&self, f: &[i64], g: &[i64], h: &[i64]) -> Result<i64> {
        self.weighted_sum(
            |i| (f[i] as i128).checked_mul(g[i] as i128)?.checked_mul(h[i] as i128),
            |i| BigInt::from(f[i]) * BigInt::from(g[i]) * BigInt::from(h[i]),
        )
    }

    fn weighted_sum(
        &self,
        fast: impl Fn(usize) -> Option<i128>,
        slow: impl Fn(usize) -> BigInt,
    ) -> Result<i64> {
        if let Some((sizes, order)) = &self.fast_sizes {
            let mut acc: Option<i128> = Some(0);
            for (i, &s) in sizes.iter().enumerate() {
                acc = acc.and_then(|a| a.checked_add(fast(i)?.checked_mul(s)?));
                if acc.is_none() {
                    break;
                }
            }
            if let Some(total) = acc {
                if total % order != 0 {
                    return Err(Error::NonIntegralResult {
                        numerator: total.to_string(),
                        denominator: order.to_string(),
                    });
                }
                return i64::try_from(total / order).map_err(|_| Error::Overflow("inner product"));
            }
        }
        let mut total = BigInt::zero();
        for (i, s) in self.class_sizes.iter().enumerate() {
            total += slow(i) * BigInt::from(s.clone());
        }
        let order = BigInt::from(self.order.clone());
        if !(&total % &order).is_zero() {
            return Err(Error::NonIntegralResult {
                numerator: total.to_string(),
                denominator: order.to_string(),
            });
        }
        (total / order)
            .to_i64()
            .ok_or(Error::Overflow("inner product"))
    }

    /// Expands a class function in the irreducible basis.
    pub fn decompose(&self, f: &ClassFunction) -> Result<VirtualCharacter> {
        let mut out = VirtualCharacter::zero(self.n);
        for (i, lambda) in self.labels.iter().enumerate() {
            let c = self.weighted_sum(
                |t| f.values[t].checked_mul(self.values[i][t] as i128),
                |t| BigInt::from(f.values[t]) * BigInt::from(self.values[i][t]),
            )?;
            out.add_term(lambda.clone(), c)?;
        }
        Ok(out)
    }

    /// `[μ]·[ν]` expanded via inner products.
    pub fn kronecker(&self, mu: &Partition, nu: &Partition) -> Result<VirtualCharacter> {
        let f = &self.values[self.index_of(mu)?];
        let g = &self.values[self.index_of(nu)?];
        let mut out = VirtualCharacter::zero(self.n);
        for (i, lambda) in self.labels.iter().enumerate() {
            let c = self.triple_product(f, g, &self.values[i])?;
            out.add_term(lambda.clone(), c)?;
        }
        Ok(out)
    }

    pub fn kronecker_coefficient(
        &self,
        mu: &Partition,
        nu: &Partition,
        lambda: &Partition,
    ) -> Result<i64> {
        self.triple_product(
            &self.values[self.index_of(mu)?],
            &self.values[self.index_of(nu)?],
            &self.values[self.index_of(lambda)?],
        )
    }

    fn to_cache(&self) -> CacheFile {
        let rows: Vec<CacheRow> = self
            .labels
            .iter()
            .zip(&self.values)
            .map(|(label, row)| CacheRow {
                label: label.to_grammar_string(),
                values: row.iter().map(|v| v.to_string()).collect(),
            })
            .collect();
        CacheFile {
            n: self.n,
            format_version: CACHE_FORMAT_VERSION,
            classes: self.labels.iter().map(Partition::to_grammar_string).collect(),
            checksum: rows_checksum(&rows),
            rows,
        }
    }

    fn from_cache(file: CacheFile, path: &Path) -> Result<Self> {
        let corrupt = |reason: String| Error::CacheCorrupt {
            path: path.to_path_buf(),
            reason,
        };
        if file.format_version != CACHE_FORMAT_VERSION {
            return Err(corrupt(format!(
                "format version {} (expected {CACHE_FORMAT_VERSION})",
                file.format_version
            )));
        }
        if rows_checksum(&file.rows) != file.checksum {
            return Err(corrupt("checksum mismatch".into()));
        }
        let labels = partitions_of(file.n);
        let expected: Vec<String> = labels.iter().map(Partition::to_grammar_string).collect();
        if file.classes != expected {
            return Err(corrupt("class list does not match".into()));
        }
        if file.rows.len() != labels.len() {
            return Err(corrupt("wrong number of rows".into()));
        }
        let mut values = Vec::with_capacity(labels.len());
        for (row, label) in file.rows.iter().zip(&expected) {
            if &row.label != label || row.values.len() != labels.len() {
                return Err(corrupt(format!("malformed row {:?}", row.label)));
            }
            let parsed = row
                .values
                .iter()
                .map(|v| v.parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| corrupt(e.to_string()))?;
            values.push(parsed);
        }
        Ok(Self::from_parts(file.n, labels, values))
    }
}

#[derive(Serialize, Deserialize)]
struct CacheRow {
    label: String,
    values: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    n: usize,
    format_version: u32,
    classes: Vec<String>,
    rows: Vec<CacheRow>,
    checksum: String,
}

fn rows_checksum(rows: &[CacheRow]) -> String {
    let canonical = serde_json::to_vec(rows).expect("rows serialize");
    hex::encode(Sha256::digest(&canonical))
}

pub fn cache_file_name(n: usize) -> String {
    format!("chartable_{n}.json")
}

/// Shared, lazily built character tables with an optional on-disk cache.
#[derive(Default)]
pub struct TableStore {
    tables: RwLock<HashMap<usize, Arc<CharacterTable>>>,
    cache_dir: RwLock<Option<PathBuf>>,
}

impl TableStore {
    pub fn new(cache_dir: Option<PathBuf>) -> Self {
        TableStore {
            tables: RwLock::new(HashMap::new()),
            cache_dir: RwLock::new(cache_dir),
        }
    }

    pub fn set_cache_dir(&self, dir: Option<PathBuf>) {
        *self.cache_dir.write().unwrap() = dir;
    }

    pub fn cache_dir(&self) -> Option<PathBuf> {
        self.cache_dir.read().unwrap().clone()
    }

    pub fn get(&self, n: usize) -> Result<Arc<CharacterTable>> {
        if let Some(t) = self.tables.read().unwrap().get(&n) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(self.load_or_compute(n)?);
        let mut tables = self.tables.write().unwrap();
        Ok(Arc::clone(tables.entry(n).or_insert(table)))
    }

    fn load_or_compute(&self, n: usize) -> Result<CharacterTable> {
        let Some(dir) = self.cache_dir() else {
            return CharacterTable::compute(n);
        };
        let path = dir.join(cache_file_name(n));
        if path.exists() {
            match read_cache(&path) {
                Ok(table) if table.n == n => return Ok(table),
                // unreadable or corrupt: fall through and overwrite
                _ => {}
            }
        }
        let table = CharacterTable::compute(n)?;
        // the cache is an optimization; a failed write leaves the result valid
        let _ = write_cache(&table, &dir);
        Ok(table)
    }
}

/// Reads and validates a cache file.
pub fn read_cache(path: &Path) -> Result<CharacterTable> {
    let bytes = fs::read(path)?;
    let file: CacheFile = serde_json::from_slice(&bytes).map_err(|e| Error::CacheCorrupt {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })?;
    CharacterTable::from_cache(file, path)
}

/// Writes `chartable_<n>.json` into `dir` through a temporary file and an
/// atomic rename.
pub fn write_cache(table: &CharacterTable, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(cache_file_name(table.n));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer_pretty(&mut tmp, &table.to_cache())?;
    tmp.write_all(b"\n")?;
    tmp.persist(&path).map_err(|e| Error::Io(e.error))?;
    Ok(path)
}

static STORE: LazyLock<TableStore> = LazyLock::new(TableStore::default);

/// The process-wide store used by the free functions of this crate.
pub fn store() -> &'static TableStore {
    &STORE
}

/// Character table of `S_n` from the global store.
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    store().get(n)
}

/// `⟨f, g⟩` using the table of the matching degree.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<i64> {
    if f.n != g.n {
        return Err(Error::size_mismatch(f.n, g.n));
    }
    character_table(f.n)?.inner_product(f, g)
}

/// `χ^λ` as a class function.
pub fn irreducible_character(lambda: &Partition) -> Result<ClassFunction> {
    character_table(lambda.size())?.character(lambda)
}
