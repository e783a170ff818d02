//! The line-oriented input format: parsing into a [`Workspace`] and canonical
//! emission.
//!
//! ```text
//! algebra ae
//! dim 2
//! succ 1 1 1 1      # e1 ≻ e1 += 1·e1
//! end
//! tensor r on ae
//! entry 1 2 1/2
//! end
//! ```
//!
//! Every name must be declared before it is referenced, possibly in an
//! earlier file of the same invocation.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use npp_core::bialgebra::CoTriple;
use npp_core::rep::{Action, SixRep};
use npp_core::{Op, QAlgebra, QMatrix, QTensor2, Scalar};
use num_traits::Zero;
use thiserror::Error;

/// `line` is 0 when the file could not be read at all.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{source_name}{}: {message}", if *.line == 0 { String::new() } else { format!(":{line}") })]
pub struct ParseError {
    pub source_name: String,
    pub line: usize,
    pub message: String,
}

/// `ALG` or `ALG.dual`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space {
    pub alg: String,
    pub dual: bool,
}

impl Space {
    fn parse(s: &str) -> Space {
        match s.strip_suffix(".dual") {
            Some(a) => Space { alg: a.to_string(), dual: true },
            None => Space { alg: s.to_string(), dual: false },
        }
    }
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.alg, if self.dual { ".dual" } else { "" })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct On<T> {
    pub on: String,
    pub value: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MapDecl {
    pub from: Space,
    pub to: Space,
    pub matrix: QMatrix,
}

/// Everything loaded so far, keyed by name within each kind.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Workspace {
    pub algebras: BTreeMap<String, QAlgebra>,
    pub tensors: BTreeMap<String, On<QTensor2>>,
    /// Skew matrices `ω(e_i, e_j)`; nondegeneracy is checked when used.
    pub forms: BTreeMap<String, On<QMatrix>>,
    pub maps: BTreeMap<String, MapDecl>,
    pub reps: BTreeMap<String, On<SixRep<Scalar>>>,
    pub comults: BTreeMap<String, On<CoTriple<Scalar>>>,
}

pub fn parse_rational(s: &str) -> Option<Scalar> {
    let body = s.strip_prefix('-').unwrap_or(s);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !den.is_none_or(digits) {
        return None;
    }
    if den.is_some_and(|d| d.bytes().all(|b| b == b'0')) {
        return None;
    }
    s.parse().ok()
}

struct Cursor<'a> {
    source: &'a str,
    line: usize,
}

impl Cursor<'_> {
    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError { source_name: self.source.to_string(), line: self.line, message: message.into() }
    }

    fn index(&self, tok: &str, bound: usize, what: &str) -> Result<usize, ParseError> {
        let i: usize = tok.parse().map_err(|_| self.err(format!("expected a {what} index, found `{tok}`")))?;
        if i == 0 || i > bound {
            return Err(self.err(format!("{what} index {i} out of range 1..={bound}")));
        }
        Ok(i - 1)
    }

    fn rational(&self, tok: &str) -> Result<Scalar, ParseError> {
        parse_rational(tok).ok_or_else(|| self.err(format!("malformed rational `{tok}`")))
    }

    fn arity(&self, toks: &[&str], n: usize) -> Result<(), ParseError> {
        if toks.len() != n {
            return Err(self.err(format!("`{}` takes {} arguments, found {}", toks[0], n - 1, toks.len() - 1)));
        }
        Ok(())
    }
}

enum Block {
    Algebra { name: String, dim: Option<usize>, entries: BTreeMap<(Op, usize, usize, usize), Scalar> },
    Tensor { name: String, on: String, dim: usize, entries: BTreeMap<(usize, usize), Scalar> },
    Form { name: String, on: String, dim: usize, entries: BTreeMap<(usize, usize), Scalar> },
    Map { name: String, from: Space, to: Space, rows: usize, cols: usize, entries: BTreeMap<(usize, usize), Scalar> },
    Rep { name: String, on: String, alg_dim: usize, dim: usize, entries: BTreeMap<(Action, usize, usize, usize), Scalar> },
    Comult { name: String, on: String, dim: usize, entries: BTreeMap<(usize, usize, usize, usize), Scalar> },
}

impl Workspace {
    pub fn load_file(&mut self, path: &Path) -> Result<(), ParseError> {
        let text = std::fs::read_to_string(path).map_err(|e| ParseError {
            source_name: path.display().to_string(),
            line: 0,
            message: format!("cannot read: {e}"),
        })?;
        self.load_str(&path.display().to_string(), &text)
    }

    /// Parse `text` and add its declarations. On error nothing is added.
    pub fn load_str(&mut self, source: &str, text: &str) -> Result<(), ParseError> {
        let mut next = self.clone();
        let mut block: Option<Block> = None;
        let mut cur = Cursor { source, line: 0 };
        for (k, raw) in text.lines().enumerate() {
            cur.line = k + 1;
            let content = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            match block.take() {
                None => block = Some(next.open(&cur, &toks)?),
                Some(b) if toks[0] == "end" => {
                    cur.arity(&toks, 1)?;
                    next.close(&cur, b)?;
                }
                Some(mut b) => {
                    body_line(&cur, &mut b, &toks)?;
                    block = Some(b);
                }
            }
        }
        if block.is_some() {
            return Err(cur.err("missing `end` at end of input"));
        }
        *self = next;
        Ok(())
    }

    fn alg_dim(&self, cur: &Cursor<'_>, name: &str) -> Result<usize, ParseError> {
        self.algebras.get(name).map(|a| a.dim()).ok_or_else(|| cur.err(format!("unknown algebra `{name}`")))
    }

    fn open(&self, cur: &Cursor<'_>, toks: &[&str]) -> Result<Block, ParseError> {
        let need_on = |n: usize| -> Result<(), ParseError> {
            if toks.len() != n || toks[2] != "on" {
                return Err(cur.err(format!("expected `{} NAME on ALG{}`", toks[0], if n == 6 { " dim M" } else { "" })));
            }
            Ok(())
        };
        let taken = |kind: &str, exists: bool| -> Result<(), ParseError> {
            if exists {
                return Err(cur.err(format!("duplicate {kind} `{}`", toks[1])));
            }
            Ok(())
        };
        let name = toks.get(1).map(|s| s.to_string()).unwrap_or_default();
        Ok(match toks[0] {
            "algebra" => {
                cur.arity(toks, 2)?;
                taken("algebra", self.algebras.contains_key(&name))?;
                Block::Algebra { name, dim: None, entries: BTreeMap::new() }
            }
            "tensor" => {
                need_on(4)?;
                taken("tensor", self.tensors.contains_key(&name))?;
                let dim = self.alg_dim(cur, toks[3])?;
                Block::Tensor { name, on: toks[3].into(), dim, entries: BTreeMap::new() }
            }
            "form" => {
                need_on(4)?;
                taken("form", self.forms.contains_key(&name))?;
                let dim = self.alg_dim(cur, toks[3])?;
                Block::Form { name, on: toks[3].into(), dim, entries: BTreeMap::new() }
            }
            "map" => {
                if toks.len() != 6 || toks[2] != "from" || toks[4] != "to" {
                    return Err(cur.err("expected `map NAME from SPACE to SPACE`"));
                }
                taken("map", self.maps.contains_key(&name))?;
                let (from, to) = (Space::parse(toks[3]), Space::parse(toks[5]));
                let cols = self.alg_dim(cur, &from.alg)?;
                let rows = self.alg_dim(cur, &to.alg)?;
                Block::Map { name, from, to, rows, cols, entries: BTreeMap::new() }
            }
            "rep" => {
                need_on(6)?;
                if toks[4] != "dim" {
                    return Err(cur.err("expected `rep NAME on ALG dim M`"));
                }
                taken("rep", self.reps.contains_key(&name))?;
                let alg_dim = self.alg_dim(cur, toks[3])?;
                let dim = toks[5].parse().map_err(|_| cur.err(format!("expected a dimension, found `{}`", toks[5])))?;
                Block::Rep { name, on: toks[3].into(), alg_dim, dim, entries: BTreeMap::new() }
            }
            "comult" => {
                need_on(4)?;
                taken("comult", self.comults.contains_key(&name))?;
                let dim = self.alg_dim(cur, toks[3])?;
                Block::Comult { name, on: toks[3].into(), dim, entries: BTreeMap::new() }
            }
            other => return Err(cur.err(format!("unknown block `{other}`"))),
        })
    }

    fn close(&mut self, cur: &Cursor<'_>, b: Block) -> Result<(), ParseError> {
        match b {
            Block::Algebra { name, dim, entries } => {
                let dim = dim.ok_or_else(|| cur.err(format!("algebra `{name}` has no `dim` line")))?;
                let mut alg = QAlgebra::zero(dim);
                for ((op, i, j, k), q) in entries {
                    alg.table_mut(op).set(i, j, k, q);
                }
                self.algebras.insert(name, alg);
            }
            Block::Tensor { name, on, dim, entries } => {
                let mut t = QTensor2::zeros(dim);
                for ((i, j), q) in entries {
                    t.set(i, j, q);
                }
                self.tensors.insert(name, On { on, value: t });
            }
            Block::Form { name, on, dim, entries } => {
                let mut m = QMatrix::zeros(dim, dim);
                for ((i, j), q) in entries {
                    m[(j, i)] = -q.clone();
                    m[(i, j)] = q;
                }
                self.forms.insert(name, On { on, value: m });
            }
            Block::Map { name, from, to, rows, cols, entries } => {
                let mut m = QMatrix::zeros(rows, cols);
                for ((i, j), q) in entries {
                    m[(i, j)] = q;
                }
                self.maps.insert(name, MapDecl { from, to, matrix: m });
            }
            Block::Rep { name, on, alg_dim, dim, entries } => {
                let mut rep = SixRep::zero(alg_dim, dim);
                for ((a, x, i, j), q) in entries {
                    rep.get_mut(a, x)[(i, j)] = q;
                }
                self.reps.insert(name, On { on, value: rep });
            }
            Block::Comult { name, on, dim, entries } => {
                let mut ct = CoTriple::zero(dim);
                for ((c, i, j, k), q) in entries {
                    let t = match c {
                        0 => &mut ct.dsucc,
                        1 => &mut ct.dprec,
                        _ => &mut ct.dast,
                    };
                    t.set(i, j, k, q);
                }
                self.comults.insert(name, On { on, value: ct });
            }
        }
        Ok(())
    }

    /// Canonical text: kinds in a fixed order, names sorted, entries in index
    /// order, zero entries omitted, forms by their upper triangle.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        let sep = |out: &mut String| {
            if !out.is_empty() {
                out.push('\n');
            }
        };
        for (name, alg) in &self.algebras {
            sep(&mut out);
            emit_algebra(&mut out, name, alg);
        }
        for (name, t) in &self.tensors {
            sep(&mut out);
            let _ = writeln!(out, "tensor {name} on {}", t.on);
            for (i, j, q) in t.value.nonzeros() {
                let _ = writeln!(out, "entry {} {} {q}", i + 1, j + 1);
            }
            out.push_str("end\n");
        }
        for (name, f) in &self.forms {
            sep(&mut out);
            let _ = writeln!(out, "form {name} on {}", f.on);
            let n = f.value.rows();
            for i in 0..n {
                for j in i + 1..n {
                    let q = &f.value[(i, j)];
                    if !q.is_zero() {
                        let _ = writeln!(out, "entry {} {} {q}", i + 1, j + 1);
                    }
                }
            }
            out.push_str("end\n");
        }
        for (name, m) in &self.maps {
            sep(&mut out);
            let _ = writeln!(out, "map {name} from {} to {}", m.from, m.to);
            for i in 0..m.matrix.rows() {
                for j in 0..m.matrix.cols() {
                    let q = &m.matrix[(i, j)];
                    if !q.is_zero() {
                        let _ = writeln!(out, "entry {} {} {q}", i + 1, j + 1);
                    }
                }
            }
            out.push_str("end\n");
        }
        for (name, r) in &self.reps {
            sep(&mut out);
            let rep = &r.value;
            let _ = writeln!(out, "rep {name} on {} dim {}", r.on, rep.dim());
            for a in Action::ALL {
                for x in 0..rep.alg_dim() {
                    let m = rep.get(a, x);
                    for i in 0..rep.dim() {
                        for j in 0..rep.dim() {
                            let q = &m[(i, j)];
                            if !q.is_zero() {
                                let _ = writeln!(out, "{} {} {} {} {q}", a.keyword(), x + 1, i + 1, j + 1);
                            }
                        }
                    }
                }
            }
            out.push_str("end\n");
        }
        for (name, c) in &self.comults {
            sep(&mut out);
            let _ = writeln!(out, "comult {name} on {}", c.on);
            for (kw, t) in [("dsucc", &c.value.dsucc), ("dprec", &c.value.dprec), ("dast", &c.value.dast)] {
                for (i, j, k, q) in t.nonzeros() {
                    let _ = writeln!(out, "{kw} {} {} {} {q}", i + 1, j + 1, k + 1);
                }
            }
            out.push_str("end\n");
        }
        out
    }
}

fn emit_algebra(out: &mut String, name: &str, alg: &QAlgebra) {
    let _ = writeln!(out, "algebra {name}");
    let _ = writeln!(out, "dim {}", alg.dim());
    for (kw, op) in [("succ", Op::Succ), ("prec", Op::Prec), ("ast", Op::Ast)] {
        for (i, j, k, q) in alg.table(op).nonzeros() {
            let _ = writeln!(out, "{kw} {} {} {} {q}", i + 1, j + 1, k + 1);
        }
    }
    out.push_str("end\n");
}

fn body_line(cur: &Cursor<'_>, b: &mut Block, toks: &[&str]) -> Result<(), ParseError> {
    let dup = || cur.err(format!("duplicate entry `{}`", toks[..toks.len() - 1].join(" ")));
    let form = matches!(b, Block::Form { .. });
    match b {
        Block::Algebra { dim, entries, .. } => {
            if toks[0] == "dim" {
                cur.arity(toks, 2)?;
                if dim.is_some() {
                    return Err(cur.err("second `dim` line"));
                }
                *dim = Some(toks[1].parse().map_err(|_| cur.err(format!("expected a dimension, found `{}`", toks[1])))?);
                return Ok(());
            }
            let op = match toks[0] {
                "succ" => Op::Succ,
                "prec" => Op::Prec,
                "ast" => Op::Ast,
                other => return Err(cur.err(format!("unknown algebra line `{other}`"))),
            };
            let n = dim.ok_or_else(|| cur.err("product line before `dim`"))?;
            cur.arity(toks, 5)?;
            let key = (op, cur.index(toks[1], n, "basis")?, cur.index(toks[2], n, "basis")?, cur.index(toks[3], n, "basis")?);
            let q = cur.rational(toks[4])?;
            if entries.insert(key, q).is_some() {
                return Err(dup());
            }
        }
        Block::Tensor { dim, entries, .. } | Block::Form { dim, entries, .. } => {
            if toks[0] != "entry" {
                return Err(cur.err(format!("unknown line `{}`; expected `entry i j q`", toks[0])));
            }
            cur.arity(toks, 4)?;
            let (i, j) = (cur.index(toks[1], *dim, "basis")?, cur.index(toks[2], *dim, "basis")?);
            let q = cur.rational(toks[3])?;
            if !form {
                if entries.insert((i, j), q).is_some() {
                    return Err(dup());
                }
                return Ok(());
            }
            if i == j {
                if !q.is_zero() {
                    return Err(cur.err(format!("diagonal entry {} {} of a skew form must be 0", i + 1, j + 1)));
                }
                return Ok(());
            }
            let (key, v) = if i < j { ((i, j), q) } else { ((j, i), -q) };
            if let Some(old) = entries.get(&key) {
                if *old != v {
                    return Err(cur.err(format!("entry {} {} conflicts with the skew closure of an earlier entry", i + 1, j + 1)));
                }
                return Err(dup());
            }
            entries.insert(key, v);
        }
        Block::Map { rows, cols, entries, .. } => {
            if toks[0] != "entry" {
                return Err(cur.err(format!("unknown line `{}`; expected `entry i j q`", toks[0])));
            }
            cur.arity(toks, 4)?;
            let key = (cur.index(toks[1], *rows, "target")?, cur.index(toks[2], *cols, "source")?);
            if entries.insert(key, cur.rational(toks[3])?).is_some() {
                return Err(dup());
            }
        }
        Block::Rep { alg_dim, dim, entries, .. } => {
            let a = Action::from_keyword(toks[0]).ok_or_else(|| cur.err(format!("unknown representation line `{}`", toks[0])))?;
            cur.arity(toks, 5)?;
            let key = (a, cur.index(toks[1], *alg_dim, "algebra")?, cur.index(toks[2], *dim, "module")?, cur.index(toks[3], *dim, "module")?);
            if entries.insert(key, cur.rational(toks[4])?).is_some() {
                return Err(dup());
            }
        }
        Block::Comult { dim, entries, .. } => {
            let c = match toks[0] {
                "dsucc" => 0,
                "dprec" => 1,
                "dast" => 2,
                other => return Err(cur.err(format!("unknown comultiplication line `{other}`"))),
            };
            cur.arity(toks, 5)?;
            let n = *dim;
            let key = (c, cur.index(toks[1], n, "basis")?, cur.index(toks[2], n, "basis")?, cur.index(toks[3], n, "basis")?);
            if entries.insert(key, cur.rational(toks[4])?).is_some() {
                return Err(dup());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use npp_core::catalog::two_dim;

    const AE: &str = "algebra ae\ndim 2\nsucc 1 1 1 1\nsucc 1 2 2 1\nprec 1 2 2 -1\nprec 2 1 2 1\nast 1 1 1 1\nast 2 1 2 1\nend\n";

    fn load(text: &str) -> Result<Workspace, ParseError> {
        let mut ws = Workspace::default();
        ws.load_str("t", text)?;
        Ok(ws)
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6"), Some("-1/2".parse().unwrap()));
        assert_eq!(parse_rational("0"), Some(Scalar::zero()));
        for bad in ["1/0", "+1", "1.5", "", "-", "1/", "/2", "1/-2", "1/00"] {
            assert_eq!(parse_rational(bad), None, "{bad}");
        }
    }

    #[test]
    fn loads_the_two_dim_example() {
        let ws = load(AE).unwrap();
        assert_eq!(ws.algebras["ae"], two_dim());
    }

    #[test]
    fn empty_block_is_the_zero_algebra() {
        let ws = load("algebra z\ndim 3\nend").unwrap();
        assert_eq!(ws.algebras["z"], QAlgebra::zero(3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("algebra a\ndim 2\nsucc 1 2 3 1\nend", 3, "out of range"),
            ("algebra a\ndim 3\n\nsucc 1 2 3 1/0\nend", 4, "malformed rational"),
            ("algebra a\ndim 2\nast 1 1 1 1\nast 1 1 1 2 # again\nend", 4, "duplicate entry"),
            ("algebra a\ndim 2\n", 2, "missing `end`"),
            ("tensor r on nope\nend", 1, "unknown algebra"),
            ("frobnicate\n", 1, "unknown block"),
        ];
        for (text, line, msg) in cases {
            let e = load(text).unwrap_err();
            assert_eq!(e.line, line, "{text}");
            assert!(e.message.contains(msg), "{e}");
        }
    }

    #[test]
    fn forms_are_closed_under_skew_symmetry() {
        let ws = load(&format!("{AE}form w on ae\nentry 2 1 -1\nend\n")).unwrap();
        let m = &ws.forms["w"].value;
        assert_eq!(m[(0, 1)], Scalar::from_integer(1.into()));
        assert_eq!(m[(1, 0)], Scalar::from_integer((-1).into()));
        let conflict = load(&format!("{AE}form w on ae\nentry 1 2 1\nentry 2 1 1\nend\n")).unwrap_err();
        assert!(conflict.message.contains("conflicts"), "{conflict}");
        let dup = load(&format!("{AE}form w on ae\nentry 1 2 1\nentry 2 1 -1\nend\n")).unwrap_err();
        assert!(dup.message.contains("duplicate"), "{dup}");
    }

    #[test]
    fn emission_is_canonical() {
        let shuffled = "algebra ae\ndim 2\nast 2 1 2 1\nprec 2 1 2 1\nsucc 1 2 2 1\nast 1 1 1 1\nsucc 1 1 1 1\nprec 1 2 2 -1\nast 2 2 2 0\nend\n";
        let a = load(AE).unwrap().emit();
        let b = load(shuffled).unwrap().emit();
        assert_eq!(a, b);
        assert_eq!(load(&a).unwrap().emit(), a);
    }

    #[test]
    fn failed_load_leaves_the_workspace_alone() {
        let mut ws = load(AE).unwrap();
        let before = ws.clone();
        assert!(ws.load_str("u", "tensor r on ae\nentry 1 1 1\nentry 9 1 1\nend\n").is_err());
        assert_eq!(ws, before);
    }
}
