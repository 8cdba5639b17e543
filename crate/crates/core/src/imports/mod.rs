//! Import extraction without a full language parser.
//!
//! Source text is cut into logical lines and `;`-separated statements by
//! [`lexer`]; each statement is stripped of any one-line compound header
//! (`if x: import y`, `try: import z`) and matched against the import grammar:
//!
//! ```text
//! import_stmt := "import" dotted_as_name ("," dotted_as_name)*
//!              | "from" "."* dotted_name? "import" ("*" | "(" names ","? ")" | names)
//! ```
//!
//! Malformed import statements are skipped with a [`Diagnostic`].

mod lexer;

use serde::Serialize;

pub use lexer::{decode_source, Diagnostic};
use lexer::{TokKind, Token};

/// One logical line: physical lines joined across continuations, comments removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogicalLine {
    pub text: String,
    pub start_line: usize,
    pub statements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogicalLines {
    pub lines: Vec<LogicalLine>,
    pub unterminated_literal: bool,
}

/// One import declaration as written in the source.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ImportDecl {
    pub module_path: String,
    /// `(name, alias)` pairs of a `from` import; empty for plain `import`.
    pub imported_names: Vec<(String, Option<String>)>,
    pub module_alias: Option<String>,
    pub relative_level: usize,
    pub is_star: bool,
    pub line: usize,
}

impl ImportDecl {
    /// Plain absolute `import <path>` declaration.
    pub fn module(path: impl Into<String>) -> Self {
        ImportDecl {
            module_path: path.into(),
            imported_names: Vec::new(),
            module_alias: None,
            relative_level: 0,
            is_star: false,
            line: 1,
        }
    }

    pub fn is_relative(&self) -> bool {
        self.relative_level > 0
    }

    /// First dotted component of an absolute import.
    pub fn top_level(&self) -> Option<&str> {
        if self.is_relative() || self.module_path.is_empty() {
            return None;
        }
        self.module_path.split('.').next()
    }

    pub fn is_future(&self) -> bool {
        self.top_level() == Some("__future__")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Extraction {
    pub imports: Vec<ImportDecl>,
    pub diagnostics: Vec<Diagnostic>,
    pub unterminated_literal: bool,
}

pub fn split_logical_lines(source: &str) -> LogicalLines {
    let lexed = lexer::lex(source);
    let lines = lexed
        .lines
        .iter()
        .map(|raw| LogicalLine {
            text: lexer::render(source, &raw.tokens),
            start_line: raw.tokens[0].line,
            statements: raw
                .statements
                .iter()
                .map(|r| lexer::render(source, &raw.tokens[r.clone()]))
                .collect(),
        })
        .collect();
    LogicalLines {
        lines,
        unterminated_literal: lexed.unterminated_literal,
    }
}

/// Every import declaration in the file, in source order.
pub fn extract_imports(source: &str) -> Vec<ImportDecl> {
    extract_imports_with_diagnostics(source).imports
}

pub fn extract_imports_with_diagnostics(source: &str) -> Extraction {
    let lexed = lexer::lex(source);
    let mut out = Extraction {
        imports: Vec::new(),
        diagnostics: lexed.diagnostics,
        unterminated_literal: lexed.unterminated_literal,
    };
    for raw in &lexed.lines {
        for range in &raw.statements {
            let stmt = strip_compound_headers(source, &raw.tokens[range.clone()]);
            let Some(first) = stmt.first() else { continue };
            let keyword = if first.kind == TokKind::Word {
                first.text(source)
            } else {
                ""
            };
            let parsed = match keyword {
                "import" => parse_import(source, stmt),
                "from" => parse_from(source, stmt),
                _ => continue,
            };
            match parsed {
                Ok(mut decls) => out.imports.append(&mut decls),
                Err(message) => {
                    let diag = Diagnostic {
                        line: first.line,
                        message: format!(
                            "skipped malformed import `{}`: {message}",
                            lexer::render(source, stmt)
                        ),
                    };
                    log::warn!("line {}: {}", diag.line, diag.message);
                    out.diagnostics.push(diag);
                }
            }
        }
    }
    out
}

/// First dotted component of every absolute import, deduplicated, in order.
pub fn top_level_names(decls: &[ImportDecl]) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for top in decls.iter().filter_map(ImportDecl::top_level) {
        if !names.iter().any(|n| n == top) {
            names.push(top.to_string());
        }
    }
    names
}

const COMPOUND_KEYWORDS: [&str; 12] = [
    "if", "elif", "else", "while", "for", "try", "except", "finally", "with", "def", "class",
    "async",
];

const KEYWORDS: [&str; 35] = [
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class", "continue",
    "def", "del", "elif", "else", "except", "finally", "for", "from", "global", "if", "import",
    "in", "is", "lambda", "nonlocal", "not", "or", "pass", "raise", "return", "try", "while",
    "with", "yield",
];

/// Drops `if cond:`-style headers so a body written on the same line is
/// examined as its own statement.
fn strip_compound_headers<'t>(src: &str, mut tokens: &'t [Token]) -> &'t [Token] {
    loop {
        let Some(first) = tokens.first() else {
            return tokens;
        };
        if first.kind != TokKind::Word || !COMPOUND_KEYWORDS.contains(&first.text(src)) {
            return tokens;
        }
        let base = first.depth;
        let mut lambdas = 0usize;
        let mut split = None;
        for (i, tok) in tokens.iter().enumerate() {
            if tok.depth != base {
                continue;
            }
            match (tok.kind, tok.text(src)) {
                (TokKind::Word, "lambda") => lambdas += 1,
                (TokKind::Op, ":") if lambdas > 0 => lambdas -= 1,
                (TokKind::Op, ":") => {
                    split = Some(i);
                    break;
                }
                _ => {}
            }
        }
        match split {
            Some(i) => tokens = &tokens[i + 1..],
            None => return tokens,
        }
    }
}

struct Cursor<'s, 't> {
    src: &'s str,
    tokens: &'t [Token],
    pos: usize,
}

impl<'s> Cursor<'s, '_> {
    fn peek(&self) -> Option<(TokKind, &'s str)> {
        self.tokens
            .get(self.pos)
            .map(|t| (t.kind, t.text(self.src)))
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn eat_op(&mut self, op: &str) -> bool {
        if self.peek() == Some((TokKind::Op, op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.peek() == Some((TokKind::Word, kw)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn name(&mut self) -> Result<&'s str, String> {
        match self.peek() {
            Some((TokKind::Word, w)) if is_identifier(w) => {
                self.pos += 1;
                Ok(w)
            }
            Some((_, other)) => Err(format!("expected a name, found `{other}`")),
            None => Err("expected a name, found end of statement".into()),
        }
    }

    fn dotted_name(&mut self) -> Result<String, String> {
        let mut path = self.name()?.to_string();
        while self.eat_op(".") {
            path.push('.');
            path.push_str(self.name()?);
        }
        Ok(path)
    }

    fn alias(&mut self) -> Result<Option<String>, String> {
        if self.eat_keyword("as") {
            Ok(Some(self.name()?.to_string()))
        } else {
            Ok(None)
        }
    }

    fn expect_end(&self) -> Result<(), String> {
        match self.peek() {
            None => Ok(()),
            Some((_, other)) => Err(format!("unexpected `{other}`")),
        }
    }
}

fn is_identifier(word: &str) -> bool {
    let mut chars = word.chars();
    chars
        .next()
        .is_some_and(|c| c == '_' || !c.is_ascii_digit())
        && !KEYWORDS.contains(&word)
}

fn parse_import(src: &str, tokens: &[Token]) -> Result<Vec<ImportDecl>, String> {
    let line = tokens[0].line;
    let mut cur = Cursor {
        src,
        tokens,
        pos: 1,
    };
    let mut decls = Vec::new();
    loop {
        let module_path = cur.dotted_name()?;
        let module_alias = cur.alias()?;
        decls.push(ImportDecl {
            module_path,
            imported_names: Vec::new(),
            module_alias,
            relative_level: 0,
            is_star: false,
            line,
        });
        if !cur.eat_op(",") {
            break;
        }
    }
    cur.expect_end()?;
    Ok(decls)
}

fn parse_from(src: &str, tokens: &[Token]) -> Result<Vec<ImportDecl>, String> {
    let line = tokens[0].line;
    let mut cur = Cursor {
        src,
        tokens,
        pos: 1,
    };
    let mut relative_level = 0;
    while cur.eat_op(".") {
        relative_level += 1;
    }
    let module_path = if cur.peek() == Some((TokKind::Word, "import")) {
        if relative_level == 0 {
            return Err("missing module name".into());
        }
        String::new()
    } else {
        cur.dotted_name()?
    };
    if !cur.eat_keyword("import") {
        return Err("expected `import`".into());
    }

    let mut decl = ImportDecl {
        module_path,
        imported_names: Vec::new(),
        module_alias: None,
        relative_level,
        is_star: false,
        line,
    };
    if cur.eat_op("*") {
        decl.is_star = true;
        cur.expect_end()?;
        return Ok(vec![decl]);
    }
    let parenthesized = cur.eat_op("(");
    loop {
        let name = cur.name()?.to_string();
        let alias = cur.alias()?;
        decl.imported_names.push((name, alias));
        if !cur.eat_op(",") {
            break;
        }
        if parenthesized && cur.peek() == Some((TokKind::Op, ")")) {
            break;
        }
        if cur.at_end() {
            return Err("trailing comma outside parentheses".into());
        }
    }
    if parenthesized && !cur.eat_op(")") {
        return Err("expected `)`".into());
    }
    cur.expect_end()?;
    Ok(vec![decl])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn paths(src: &str) -> Vec<(String, usize)> {
        extract_imports(src)
            .into_iter()
            .map(|d| (d.module_path, d.relative_level))
            .collect()
    }

    fn p(path: &str, level: usize) -> (String, usize) {
        (path.to_string(), level)
    }

    #[test]
    fn semicolon_splits_statements() {
        let lines = split_logical_lines("import a; import b");
        assert_eq!(lines.lines.len(), 1);
        assert_eq!(lines.lines[0].statements, vec!["import a", "import b"]);
    }

    #[test]
    fn bracket_continuation_joins_lines() {
        let lines = split_logical_lines("from x import (\n  y,\n  z)");
        assert_eq!(lines.lines.len(), 1);
        assert_eq!(lines.lines[0].text, "from x import (y, z)");
        assert_eq!(lines.lines[0].start_line, 1);
    }

    #[test]
    fn backslash_continuation_joins_lines() {
        let lines = split_logical_lines("import a, \\\n    b\nx = 1\n");
        assert_eq!(lines.lines.len(), 2);
        assert_eq!(lines.lines[0].text, "import a, b");
        assert_eq!(lines.lines[1].start_line, 3);
    }

    #[test]
    fn string_literals_are_opaque() {
        let lines = split_logical_lines("s = 'import fake'");
        assert_eq!(lines.lines[0].statements, vec!["s = 'import fake'"]);
        assert!(extract_imports("s = 'import fake'").is_empty());
        assert!(extract_imports("s = \"\"\"\nimport fake\n\"\"\"\n").is_empty());
        assert!(extract_imports("x = rb'''\nfrom a import b'''").is_empty());
    }

    #[test]
    fn comments_are_stripped() {
        let lines = split_logical_lines("# import nope\nimport yes  # import no\n");
        assert_eq!(lines.lines.len(), 1);
        assert_eq!(lines.lines[0].text, "import yes");
        assert_eq!(
            paths("# import nope\nimport yes # import no"),
            vec![p("yes", 0)]
        );
    }

    #[test]
    fn unterminated_triple_quote_is_tolerated() {
        let out = extract_imports_with_diagnostics("import a\ns = '''\nimport b\n");
        assert!(out.unterminated_literal);
        assert_eq!(out.imports.len(), 1);
        assert!(split_logical_lines("x = \"\"\"never closed").unterminated_literal);
    }

    #[test]
    fn geocode_snippet_imports() {
        let decls = extract_imports("import requests\nimport json\n");
        assert_eq!(
            decls,
            vec![ImportDecl::module("requests"), {
                let mut d = ImportDecl::module("json");
                d.line = 2;
                d
            }]
        );
    }

    #[test]
    fn graph_snippet_imports() {
        let src = "# Import modules from networkx and matplotlib\n\
                   from networkx.drawing.nx_agraph import graphviz_layout\n\
                   import matplotlib.pyplot as plot\n\
                   import networkx as nx\n";
        let decls = extract_imports(src);
        let got: Vec<_> = decls
            .iter()
            .map(|d| (d.module_path.as_str(), d.module_alias.as_deref()))
            .collect();
        assert_eq!(
            got,
            vec![
                ("networkx.drawing.nx_agraph", None),
                ("matplotlib.pyplot", Some("plot")),
                ("networkx", Some("nx")),
            ]
        );
        assert_eq!(
            decls[0].imported_names,
            vec![("graphviz_layout".to_string(), None)]
        );
        assert_eq!(
            decls.iter().map(|d| d.line).collect::<Vec<_>>(),
            vec![2, 3, 4]
        );
    }

    #[test]
    fn relative_imports() {
        let decls = extract_imports("from . import sibling");
        assert_eq!(decls.len(), 1);
        assert_eq!(decls[0].relative_level, 1);
        assert_eq!(decls[0].module_path, "");
        assert_eq!(paths("from ...pkg.mod import x"), vec![p("pkg.mod", 3)]);
        assert_eq!(paths("from .. import x"), vec![p("", 2)]);
        assert_eq!(paths("from .import x"), vec![p("", 1)]);
    }

    #[test]
    fn comma_separated_plain_imports() {
        // Expected value cross-checked with Python's ast module.
        assert_eq!(paths("import a.b, c"), vec![p("a.b", 0), p("c", 0)]);
    }

    #[test]
    fn star_and_aliases() {
        let d = &extract_imports("from os.path import *")[0];
        assert!(d.is_star);
        assert!(d.imported_names.is_empty());
        let d = &extract_imports("from a import (b as c, d,)")[0];
        assert_eq!(
            d.imported_names,
            vec![("b".into(), Some("c".into())), ("d".into(), None)]
        );
    }

    #[test]
    fn nested_and_guarded_imports() {
        let src = "def f():\n    import inner\ntry: import json\nexcept ImportError: import simplejson as json\n\
                   if x: from a import b\nclass K(object): import k\nwhile lambda: 0: import w\n";
        assert_eq!(
            paths(src),
            vec![
                p("inner", 0),
                p("json", 0),
                p("simplejson", 0),
                p("a", 0),
                p("k", 0),
                p("w", 0)
            ]
        );
    }

    #[test]
    fn header_colons_inside_brackets_are_skipped() {
        assert_eq!(paths("if d[1:2] and {1: 2}: import x"), vec![p("x", 0)]);
        assert_eq!(paths("if (y := 3): import z"), vec![p("z", 0)]);
        assert_eq!(paths("def f(a: int) -> None: import q"), vec![p("q", 0)]);
    }

    #[test]
    fn malformed_imports_are_skipped_with_diagnostic() {
        let out = extract_imports_with_diagnostics(
            "import\nimport (a)\nfrom import x\nfrom a import b,\nimport ok\n",
        );
        assert_eq!(out.imports.len(), 1);
        assert_eq!(out.imports[0].module_path, "ok");
        assert_eq!(out.diagnostics.len(), 4);
    }

    #[test]
    fn non_import_uses_of_keywords() {
        assert!(
            extract_imports("raise X from Y\nyield_from = 1\nx = __import__('os')\n").is_empty()
        );
    }

    #[test]
    fn whitespace_inside_dotted_names() {
        assert_eq!(paths("import  a . b"), vec![p("a.b", 0)]);
    }

    #[test]
    fn top_level_names_dedup_in_order() {
        let decls = [
            ImportDecl::module("matplotlib.pyplot"),
            ImportDecl::module("networkx"),
        ];
        assert_eq!(top_level_names(&decls), vec!["matplotlib", "networkx"]);
        assert!(top_level_names(&[]).is_empty());
        let decls = [ImportDecl::module("a.b"), ImportDecl::module("a.c")];
        assert_eq!(top_level_names(&decls), vec!["a"]);
        let rel = extract_imports("from .x import y");
        assert!(top_level_names(&rel).is_empty());
    }

    #[test]
    fn crlf_and_lossy_input() {
        assert_eq!(
            paths("import a\r\nimport b\r\n"),
            vec![p("a", 0), p("b", 0)]
        );
        let (text, lossy) = decode_source(b"import a\n\xff\n");
        assert!(lossy);
        assert_eq!(paths(&text), vec![p("a", 0)]);
        assert!(!decode_source(b"import a").1);
    }

    proptest! {
        #[test]
        fn literal_and_comment_opacity(filler in "[ -~\\t]{0,40}") {
            let base = "import os\nfrom a.b import c\nx = 1\n";
            let expected = extract_imports(base);
            let escaped = filler.replace(['\\', '\''], "");
            let in_string = format!("import os\ns = '{escaped}'\nfrom a.b import c\nx = 1\n");
            let in_triple = format!("import os\ns = '''{escaped}\n{escaped}'''\nfrom a.b import c\nx = 1\n");
            let in_comment = format!("import os # {filler}\nfrom a.b import c\nx = 1\n");
            let strip = |v: Vec<ImportDecl>| v.into_iter().map(|d| (d.module_path, d.relative_level, d.imported_names)).collect::<Vec<_>>();
            let expected = strip(expected);
            prop_assert_eq!(strip(extract_imports(&in_string)), expected.clone());
            prop_assert_eq!(strip(extract_imports(&in_triple)), expected.clone());
            prop_assert_eq!(strip(extract_imports(&in_comment)), expected);
        }

        #[test]
        fn lines_non_decreasing_and_pure(src in "(import [a-c]\n|from \\.?[a-c] import [x-z]\n|x = '[a-z ]*'\n|if q: import [a-c]\n|# c\n|\n){0,12}") {
            let first = extract_imports(&src);
            prop_assert!(first.windows(2).all(|w| w[0].line <= w[1].line));
            prop_assert_eq!(first, extract_imports(&src));
        }

        #[test]
        fn never_panics_on_arbitrary_text(src in "\\PC{0,200}") {
            let _ = extract_imports_with_diagnostics(&src);
            let _ = split_logical_lines(&src);
        }
    }
}
