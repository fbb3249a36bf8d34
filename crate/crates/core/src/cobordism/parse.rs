//! Recursive-descent parser for the cobordism DSL.
//!
//! ```text
//! word  := layer (";" layer)*
//! layer := piece ("*" piece)*
//! piece := "id(" elt ")" | "cyl(" elt ";" elt ")" | "merge(" elt "," elt ")"
//!        | "split(" elt "," elt ")" | "cap" | "cup" | "swap(" elt "," elt ")"
//! ```
//!
//! Whitespace is insignificant and `#` starts a comment running to the end of
//! the line.

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};

use super::{Cobordism, Piece};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Open,
    Close,
    Comma,
    Semi,
    Star,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Name(s) => format!("`{s}`"),
            Tok::Open => "`(`".into(),
            Tok::Close => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Star => "`*`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn is_name_char(c: char) -> bool {
    !c.is_whitespace() && !"(),;*#".contains(c)
}

fn lex(text: &str) -> Vec<(Tok, usize, usize)> {
    let mut out = Vec::new();
    for (row, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<(usize, char)> = line.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (_, c) = chars[i];
            let col = i + 1;
            let tok = match c {
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '(' => Tok::Open,
                ')' => Tok::Close,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '*' => Tok::Star,
                _ => {
                    let start = i;
                    while i < chars.len() && is_name_char(chars[i].1) {
                        i += 1;
                    }
                    let name: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                    out.push((Tok::Name(name), row + 1, col));
                    continue;
                }
            };
            out.push((tok, row + 1, col));
            i += 1;
        }
    }
    let (line, column) = match text.lines().enumerate().last() {
        Some((row, line)) => (row + 1, line.chars().count() + 1),
        None => (1, 1),
    };
    out.push((Tok::End, line, column));
    out
}

struct Parser<'a> {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    group: &'a FiniteGroup,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn error(&self, expected: &str) -> Error {
        let (tok, line, column) = &self.toks[self.pos];
        Error::Parse {
            line: *line,
            column: *column,
            expected: expected.into(),
            found: tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&tok.describe()))
        }
    }

    fn element(&mut self) -> Result<Elem> {
        match self.peek().clone() {
            Tok::Name(name) => {
                self.pos += 1;
                self.group.index_of(&name)
            }
            _ => Err(self.error("an element name")),
        }
    }

    fn pair(&mut self, sep: Tok) -> Result<(Elem, Elem)> {
        self.expect(Tok::Open)?;
        let a = self.element()?;
        self.expect(sep)?;
        let b = self.element()?;
        self.expect(Tok::Close)?;
        Ok((a, b))
    }

    fn piece(&mut self) -> Result<Piece> {
        let keyword = match self.peek() {
            Tok::Name(s) => s.clone(),
            _ => return Err(self.error("a piece")),
        };
        let piece = match keyword.as_str() {
            "cap" => {
                self.pos += 1;
                Piece::Cap
            }
            "cup" => {
                self.pos += 1;
                Piece::Cup
            }
            "id" => {
                self.pos += 1;
                self.expect(Tok::Open)?;
                let g = self.element()?;
                self.expect(Tok::Close)?;
                Piece::Id(g)
            }
            "cyl" => {
                self.pos += 1;
                let (g, k) = self.pair(Tok::Semi)?;
                Piece::Cyl { g, k }
            }
            "merge" | "split" | "swap" => {
                self.pos += 1;
                let (g, h) = self.pair(Tok::Comma)?;
                match keyword.as_str() {
                    "merge" => Piece::Merge(g, h),
                    "split" => Piece::Split(g, h),
                    _ => Piece::Swap(g, h),
                }
            }
            _ => return Err(self.error("one of id, cyl, merge, split, cap, cup, swap")),
        };
        Ok(piece)
    }

    fn layer(&mut self) -> Result<Vec<Piece>> {
        let mut layer = vec![self.piece()?];
        while *self.peek() == Tok::Star {
            self.pos += 1;
            layer.push(self.piece()?);
        }
        Ok(layer)
    }

    fn word(&mut self) -> Result<Vec<Vec<Piece>>> {
        let mut layers = vec![self.layer()?];
        while *self.peek() == Tok::Semi {
            self.pos += 1;
            layers.push(self.layer()?);
        }
        if *self.peek() != Tok::End {
            return Err(self.error("`;`, `*` or end of input"));
        }
        Ok(layers)
    }
}

/// Parses and type-checks a word against `group`.
pub fn parse(text: &str, group: &FiniteGroup) -> Result<Cobordism> {
    let mut p = Parser {
        toks: lex(text),
        pos: 0,
        group,
    };
    let layers = p.word()?;
    Cobordism::new(group, layers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_word() {
        let g = FiniteGroup::from_spec("cyclic:1").unwrap();
        let c = parse("id(e)", &g).unwrap();
        assert_eq!(c.domain(), &[0]);
        assert_eq!(c.codomain(), &[0]);
        assert_eq!(c.layers(), &[vec![Piece::Id(0)]]);
    }

    #[test]
    fn comments_and_whitespace() {
        let g = FiniteGroup::from_spec("cyclic:2").unwrap();
        let text = "# a torus with one hole\n  cap;split( a , a )  # pants\n;\tmerge(a,a)\n";
        let c = parse(text, &g).unwrap();
        assert_eq!(c.to_text(&g), "cap ; split(a,a) ; merge(a,a)");
        assert!(c.domain().is_empty());
    }

    #[test]
    fn conjugating_cylinder_types() {
        let g = FiniteGroup::from_spec("symmetric:3").unwrap();
        // p213·p231·p213⁻¹ = p312
        let c = parse("split(p231,p213) ; cyl(p231;p213) * id(p213) ; merge(p312,p213)", &g).unwrap();
        let a = g.index_of("p231").unwrap();
        let b = g.index_of("p213").unwrap();
        assert_eq!(c.domain(), &[g.mul(a, b)]);
        assert_eq!(c.codomain(), &[g.mul(g.conj(b, a), b)]);
        let bad = parse("split(p231,p213) ; cyl(p231;p213) * id(p213) ; merge(p231,p213)", &g);
        assert!(matches!(bad, Err(Error::Type(_))));
    }

    #[test]
    fn abelian_merge_split_always_types() {
        let g = FiniteGroup::from_spec("cyclic:2").unwrap();
        for x in ["e", "a"] {
            for y in ["e", "a"] {
                parse(&format!("merge({x},{y}) ; split({y},{x})"), &g).unwrap();
            }
        }
        // over S₃ it types only for commuting labels
        let s3 = FiniteGroup::from_spec("symmetric:3").unwrap();
        assert!(parse("merge(p213,p132) ; split(p132,p213)", &s3).is_err());
        assert!(parse("merge(p231,p312) ; split(p312,p231)", &s3).is_ok());
    }

    #[test]
    fn error_locations() {
        let g = FiniteGroup::from_spec("cyclic:2").unwrap();
        match parse("cap ;\n  merge(a a)", &g) {
            Err(Error::Parse { line, column, expected, found }) => {
                assert_eq!((line, column), (2, 11));
                assert_eq!(expected, "`,`");
                assert_eq!(found, "`a`");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("", &g), Err(Error::Parse { .. })));
        assert!(matches!(parse("cap cup", &g), Err(Error::Parse { .. })));
        assert!(matches!(parse("blob(e)", &g), Err(Error::Parse { .. })));
        assert!(matches!(parse("id(z)", &g), Err(Error::UnknownElement(z)) if z == "z"));
    }

    #[test]
    fn print_parse_round_trip_on_quaternions() {
        let g = FiniteGroup::from_spec("quaternion8").unwrap();
        let text = "split(i,j) ; swap(i,j) ; cyl(j;-1) * cyl(i;k) ; merge(j,-i)";
        let c = parse(text, &g).unwrap();
        assert_eq!(c.to_text(&g), text);
        assert_eq!(parse(&c.to_text(&g), &g).unwrap(), c);
    }
}
