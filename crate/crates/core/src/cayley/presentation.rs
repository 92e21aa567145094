//! Group presentations and their text format.
//!
//! ```text
//! gens: a b; rels: a^2, b^3, (a*b)^3
//! surface(0, [2, 3, 3], 0)
//! surface(0, [2, 2], 0); rels: (e1*e2)^3
//! ```
//!
//! Words are products of generators joined by `*`, with integer exponents
//! (`a^-1`), parentheses and commutators `[u, v] = u v u⁻¹ v⁻¹`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// Column index in a coset table: `2g` for `g`, `2g + 1` for `g⁻¹`.
    pub fn column(self) -> usize {
        2 * self.generator + usize::from(self.inverse)
    }
}

pub type Word = Vec<Letter>;

/// Cancels adjacent inverse pairs.
pub fn reduce(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn inverse(word: &[Letter]) -> Word {
    word.iter().rev().map(|l| l.inv()).collect()
}

pub fn power(word: &[Letter], n: i64) -> Word {
    let base = if n < 0 { inverse(word) } else { word.to_vec() };
    let mut out = Vec::new();
    for _ in 0..n.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    reduce(&out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Fails if a relator mentions an undeclared generator.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Presentation> {
        for r in &relators {
            if r.iter().any(|l| l.generator >= generators.len()) {
                return Err(Error::MalformedInput(
                    "relator uses an undeclared generator".into(),
                ));
            }
        }
        let relators = relators
            .iter()
            .map(|r| reduce(r))
            .filter(|r| !r.is_empty())
            .collect();
        Ok(Presentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn parse(text: &str) -> Result<Presentation> {
        parse(text)
    }

    /// Formats a word with runs written as powers, e.g. `a^2*b^-1`.
    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let name = &self.generators[w[i].generator];
            let n = (j - i) as i64 * if w[i].inverse { -1 } else { 1 };
            parts.push(if n == 1 {
                name.clone()
            } else {
                format!("{name}^{n}")
            });
            i = j;
        }
        parts.join("*")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(
            f,
            "gens: {}; rels: {}",
            self.generators.join(" "),
            rels.join(", ")
        )
    }
}

/// `⟨a₁, b₁, …, a_p, b_p, e₁, …, e_r, f₁, …, f_s | e_j^{m_j}, extras,
/// [a₁,b₁]⋯[a_p,b_p] e₁⋯e_r f₁⋯f_s⟩`, with `r = m.len()`. Each extra is a
/// word over these generator names and an exponent.
pub fn surface_presentation(
    p: usize,
    m: &[i64],
    s: usize,
    extras: &[(String, i64)],
) -> Result<Presentation> {
    if let Some(&bad) = m.iter().find(|&&x| x < 2) {
        return Err(Error::BadExponent(bad));
    }
    let mut generators = Vec::new();
    for i in 1..=p {
        generators.push(format!("a{i}"));
        generators.push(format!("b{i}"));
    }
    generators.extend((1..=m.len()).map(|j| format!("e{j}")));
    generators.extend((1..=s).map(|k| format!("f{k}")));
    let letter = |generator| Letter {
        generator,
        inverse: false,
    };
    let mut relators: Vec<Word> = m
        .iter()
        .enumerate()
        .map(|(j, &mj)| power(&[letter(2 * p + j)], mj))
        .collect();
    for (w, n) in extras {
        if *n < 1 {
            return Err(Error::BadExponent(*n));
        }
        let mut parser = Parser::new(w, &generators);
        let word = parser.word()?;
        parser.finish()?;
        relators.push(power(&word, *n));
    }
    let mut surface = Vec::new();
    for i in 0..p {
        let (a, b) = (letter(2 * i), letter(2 * i + 1));
        surface.extend([a, b, a.inv(), b.inv()]);
    }
    surface.extend((0..m.len() + s).map(|j| letter(2 * p + j)));
    relators.push(surface);
    Presentation::new(generators, relators)
}

fn parse_err(message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        message: message.into(),
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn new(text: &str, names: &'a [String]) -> Parser<'a> {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            names,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(parse_err(format!(
                "expected '{c}' at column {}",
                self.pos + 1
            )))
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(parse_err(format!(
                "unexpected '{c}' at column {}",
                self.pos + 1
            ))),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| parse_err(format!("expected an integer at column {}", start + 1)))
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(parse_err(format!(
                "expected a generator at column {}",
                start + 1
            )));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn word(&mut self) -> Result<Word> {
        let mut out = self.term()?;
        while self.eat('*') {
            out.extend(self.term()?);
        }
        Ok(reduce(&out))
    }

    fn term(&mut self) -> Result<Word> {
        let base = if self.eat('(') {
            let w = self.word()?;
            self.expect(')')?;
            w
        } else if self.eat('[') {
            let u = self.word()?;
            self.expect(',')?;
            let v = self.word()?;
            self.expect(']')?;
            let mut w = u.clone();
            w.extend(v.iter().copied());
            w.extend(inverse(&u));
            w.extend(inverse(&v));
            w
        } else {
            let name = self.ident()?;
            if name == "1" {
                Vec::new()
            } else {
                let generator = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| parse_err(format!("unknown generator '{name}'")))?;
                vec![Letter {
                    generator,
                    inverse: false,
                }]
            }
        };
        if self.eat('^') {
            let n = self.integer()?;
            Ok(power(&base, n))
        } else {
            Ok(base)
        }
    }

    fn word_list(&mut self) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        if self.peek().is_none() {
            return Ok(out);
        }
        out.push(self.word()?);
        while self.eat(',') {
            out.push(self.word()?);
        }
        Ok(out)
    }
}

fn parse(text: &str) -> Result<Presentation> {
    let text: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ");
    let mut sections = text.split(';').map(str::trim).filter(|s| !s.is_empty());
    let head = sections
        .next()
        .ok_or_else(|| parse_err("empty presentation"))?;
    let mut pres = if let Some(rest) = head.strip_prefix("surface") {
        let none: [String; 0] = [];
        let mut p = Parser::new(rest, &none);
        p.expect('(')?;
        let genus = p.integer()?;
        p.expect(',')?;
        p.expect('[')?;
        let mut m = Vec::new();
        if !p.eat(']') {
            m.push(p.integer()?);
            while p.eat(',') {
                m.push(p.integer()?);
            }
            p.expect(']')?;
        }
        p.expect(',')?;
        let s = p.integer()?;
        p.expect(')')?;
        p.finish()?;
        if genus < 0 || s < 0 {
            return Err(parse_err("surface counts must be non-negative"));
        }
        surface_presentation(genus as usize, &m, s as usize, &[])?
    } else if let Some(rest) = head.strip_prefix("gens:") {
        let generators: Vec<String> = rest.split_whitespace().map(String::from).collect();
        if let Some(bad) = generators.iter().find(|g| {
            !g.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') || g.as_str() == "1"
        }) {
            return Err(parse_err(format!("invalid generator name '{bad}'")));
        }
        Presentation::new(generators, Vec::new())?
    } else {
        return Err(parse_err("expected 'gens:' or 'surface('"));
    };
    for section in sections {
        let rest = section
            .strip_prefix("rels:")
            .ok_or_else(|| parse_err(format!("unexpected section '{section}'")))?;
        let mut p = Parser::new(rest, &pres.generators);
        let words = p.word_list()?;
        p.finish()?;
        let mut relators = pres.relators.clone();
        relators.extend(words);
        pres = Presentation::new(pres.generators.clone(), relators)?;
    }
    Ok(pres)
}
