//! Text descriptors for modules.
//!
//! ```text
//! dmodule  := factor ("*" factor)*
//! factor   := "O" | "OF" | "XL(" rational ")"
//! glmodule := term ("#" term)*
//! term     := "wedge(" int ")" | "sym(" int ")" | "char(" rational ("," rational)* ")"
//!           | "dual(" glmodule ")" | "resD(" dmodule ";" rational ")"
//! ```
//!
//! `#` is the tensor product and associates to the left. `XL` needs a
//! non-integral parameter.

use crate::dmod::{DFactor, DModule};
use crate::error::{Error, Result};
use crate::glmod::{character, dual_gl, sym, tensor_gl, wedge, GlDesc, GlModule};
use crate::lattice::{parse_scalar, Scalar};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected '{tok}'"))
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    fn rational(&mut self) -> Result<Scalar> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || c == '/' || (c == '-' && i == 0)))
            .map_or(rest.len(), |(i, _)| i);
        let text = &rest[..len];
        match parse_scalar(text) {
            Some(s) => {
                self.pos += len;
                Ok(s)
            }
            None => self.err(format!("malformed rational '{text}'")),
        }
    }

    fn natural(&mut self) -> Result<usize> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        match rest[..len].parse() {
            Ok(k) => {
                self.pos += len;
                Ok(k)
            }
            Err(_) => self.err("expected a nonnegative integer"),
        }
    }

    fn factor(&mut self) -> Result<DFactor> {
        if self.eat("XL(") {
            let at = self.pos;
            let l = self.rational()?;
            if l.is_integer() {
                return Err(Error::Syntax { pos: at, msg: "XL needs a non-integral parameter".into() });
            }
            self.expect(")")?;
            Ok(DFactor::Laurent(l))
        } else if self.eat("OF") {
            Ok(DFactor::FPoly)
        } else if self.eat("O") {
            Ok(DFactor::Poly)
        } else {
            self.err("unknown factor kind (expected O, OF or XL(..))")
        }
    }

    fn dmodule(&mut self) -> Result<DModule> {
        let mut factors = vec![self.factor()?];
        while self.eat("*") {
            factors.push(self.factor()?);
        }
        Ok(DModule::new(factors))
    }

    fn term(&mut self) -> Result<GlDesc> {
        if self.eat("wedge(") {
            let k = self.natural()?;
            self.expect(")")?;
            Ok(GlDesc::Wedge(k))
        } else if self.eat("sym(") {
            let k = self.natural()?;
            self.expect(")")?;
            Ok(GlDesc::Sym(k))
        } else if self.eat("char(") {
            let mut c = vec![self.rational()?];
            while self.eat(",") {
                c.push(self.rational()?);
            }
            self.expect(")")?;
            Ok(GlDesc::Char(c))
        } else if self.eat("dual(") {
            let g = self.glmodule()?;
            self.expect(")")?;
            Ok(GlDesc::Dual(Box::new(g)))
        } else if self.eat("resD(") {
            let p = self.dmodule()?;
            self.expect(";")?;
            let k = self.rational()?;
            self.expect(")")?;
            Ok(GlDesc::ResD(p, k))
        } else {
            self.err("unknown gl-module (expected wedge, sym, char, dual or resD)")
        }
    }

    fn glmodule(&mut self) -> Result<GlDesc> {
        let mut g = self.term()?;
        while self.eat("#") {
            let h = self.term()?;
            g = GlDesc::Tensor(Box::new(g), Box::new(h));
        }
        Ok(g)
    }
}

fn nonempty(text: &str) -> Result<()> {
    if text.trim().is_empty() {
        Err(Error::Syntax { pos: 0, msg: "empty descriptor".into() })
    } else {
        Ok(())
    }
}

pub fn parse_dmodule(text: &str) -> Result<DModule> {
    nonempty(text)?;
    let mut p = Parser::new(text);
    let d = p.dmodule()?;
    p.finish()?;
    Ok(d)
}

pub fn parse_gl_desc(text: &str) -> Result<GlDesc> {
    nonempty(text)?;
    let mut p = Parser::new(text);
    let g = p.glmodule()?;
    p.finish()?;
    Ok(g)
}

/// Builds the `gl(n)`-module named by a descriptor. A one-entry `char(c)`
/// stands for the constant weight `(c, ..., c)`.
pub fn build_gl(desc: &GlDesc, n: usize) -> Result<GlModule> {
    let mut g = match desc {
        GlDesc::Wedge(k) => wedge(n, *k)?,
        GlDesc::Sym(k) => sym(n, *k),
        GlDesc::Char(c) => {
            let c = if c.len() == 1 { vec![c[0].clone(); n] } else { c.clone() };
            if c.len() != n {
                return Err(Error::Dimension { expected: n, got: c.len() });
            }
            character(c)?
        }
        GlDesc::Dual(h) => dual_gl(&build_gl(h, n)?),
        GlDesc::Tensor(a, b) => tensor_gl(&build_gl(a, n)?, &build_gl(b, n)?)?,
        GlDesc::ResD(p, k) => {
            if p.n() != n {
                return Err(Error::Dimension { expected: n, got: p.n() });
            }
            GlModule::restriction(p, k)?
        }
    };
    g.desc = desc.clone();
    Ok(g)
}

pub fn parse_glmodule(text: &str, n: usize) -> Result<GlModule> {
    build_gl(&parse_gl_desc(text)?, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::frac;

    #[test]
    fn examples() {
        let p = parse_dmodule("O*OF*XL(1/2)").unwrap();
        assert_eq!(p.factors, vec![DFactor::Poly, DFactor::FPoly, DFactor::Laurent(frac(1, 2))]);
        let g = parse_gl_desc("wedge(2)#dual(sym(3))").unwrap();
        assert!(matches!(g, GlDesc::Tensor(_, _)));
        assert!(matches!(parse_dmodule("XL(2)"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_dmodule("O*Q"), Err(Error::Syntax { pos: 2, .. })));
        assert!(parse_dmodule("XL(1/0)").is_err());
        assert!(parse_dmodule("").is_err());
        assert!(parse_gl_desc("wedge(1) extra").is_err());
        let g = parse_glmodule("resD(O*OF;1)", 2).unwrap();
        assert_eq!(g.desc.to_string(), "resD(O*OF;1)");
        let g = parse_glmodule("char(1/2)", 2).unwrap();
        assert_eq!(g.dim(), Some(1));
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(parse_dmodule(" O * XL( -1/3 ) ").unwrap().to_string(), "O*XL(-1/3)");
    }
}
