#![allow(dead_code)]

use std::collections::BTreeMap;

/// A parsed `digraph`: node ids and edges with their attributes.
#[derive(Debug, Default)]
pub struct DotGraph {
    pub name: String,
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String, BTreeMap<String, String>)>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    Arrow,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Eq,
    Comma,
    Semi,
}

fn lex(src: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '{' | '}' | '[' | ']' | '=' | ',' | ';' => {
                chars.next();
                out.push(match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '=' => Tok::Eq,
                    ',' => Tok::Comma,
                    _ => Tok::Semi,
                });
            }
            '-' => {
                chars.next();
                if chars.next() != Some('>') {
                    return Err("expected '->'".into());
                }
                out.push(Tok::Arrow);
            }
            '"' => {
                chars.next();
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('\\') => s.push(chars.next().ok_or("dangling escape")?),
                        Some('"') => break,
                        Some(c) => s.push(c),
                        None => return Err("unterminated string".into()),
                    }
                }
                out.push(Tok::Id(s));
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '.' {
                        s.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Id(s));
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    Ok(out)
}

/// Reads the subset of DOT the tool emits; anything else is an error.
pub fn parse_dot(src: &str) -> Result<DotGraph, String> {
    let toks = lex(src)?;
    let mut it = toks.into_iter().peekable();
    let mut next = || {
        it.next()
            .ok_or_else(|| "unexpected end of input".to_string())
    };
    if next()? != Tok::Id("digraph".into()) {
        return Err("expected digraph".into());
    }
    let Tok::Id(name) = next()? else {
        return Err("expected graph name".into());
    };
    if next()? != Tok::LBrace {
        return Err("expected '{'".into());
    }
    let mut g = DotGraph {
        name,
        ..Default::default()
    };
    loop {
        let head = match next()? {
            Tok::RBrace => break,
            Tok::Id(s) => s,
            t => return Err(format!("unexpected {t:?}")),
        };
        match next()? {
            Tok::Semi => g.nodes.push(head),
            Tok::Arrow => {
                let Tok::Id(tail) = next()? else {
                    return Err("expected edge target".into());
                };
                let mut attrs = BTreeMap::new();
                match next()? {
                    Tok::Semi => {}
                    Tok::LBracket => {
                        loop {
                            let Tok::Id(k) = next()? else {
                                return Err("expected attribute name".into());
                            };
                            if next()? != Tok::Eq {
                                return Err("expected '='".into());
                            }
                            let Tok::Id(v) = next()? else {
                                return Err("expected attribute value".into());
                            };
                            attrs.insert(k, v);
                            match next()? {
                                Tok::Comma => continue,
                                Tok::RBracket => break,
                                t => return Err(format!("unexpected {t:?} in attributes")),
                            }
                        }
                        if next()? != Tok::Semi {
                            return Err("expected ';'".into());
                        }
                    }
                    t => return Err(format!("unexpected {t:?} after edge")),
                }
                g.edges.push((head, tail, attrs));
            }
            t => return Err(format!("unexpected {t:?} after {head:?}")),
        }
    }
    if it.next().is_some() {
        return Err("trailing input after graph".into());
    }
    Ok(g)
}

/// Hand-transcribed arrow list of a figure.
#[derive(Debug, serde::Deserialize)]
pub struct ArrowTranscription {
    pub n: u32,
    pub m: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<[String; 2]>,
}

pub fn golden_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn transcription(name: &str) -> ArrowTranscription {
    let text = std::fs::read_to_string(golden_path(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}
