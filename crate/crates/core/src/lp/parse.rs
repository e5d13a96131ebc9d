use std::collections::BTreeSet;

use super::diagnostic::{codes, Diagnostic};
use super::expr::LinearExpression;
use super::model::{ConstraintSense, Model, NamedConstraint, ObjectiveSense, VarKind};

/// Result of a detailed parse: the model plus raw-section facts that the
/// repair pipeline needs (which variables carry explicit bound lines, which
/// are declared integer/binary in the text).
#[derive(Debug)]
pub struct ParseOutput {
    pub model: Model,
    /// Variables with an explicit entry in the Bounds section, pre-canonicalization.
    pub raw_bound_vars: BTreeSet<String>,
    /// Variables listed in the General section.
    pub raw_general_vars: BTreeSet<String>,
    /// Variables listed in the Binary section.
    pub raw_binary_vars: BTreeSet<String>,
}

/// Parse LP text into a [`Model`]. On failure returns every error found
/// with line information.
pub fn parse_lp(text: &str) -> Result<Model, Vec<Diagnostic>> {
    parse_lp_detailed(text).map(|out| out.model)
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Section {
    Preamble,
    Objective,
    Constraints,
    Bounds,
    General,
    Binary,
    End,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(f64),
    Plus,
    Minus,
    Sense(ConstraintSense),
    Colon,
    Free,
    Inf(bool), // true = +inf
}

struct Line {
    number: usize,
    toks: Vec<Tok>,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Tokenize one line (comments already stripped). Errors carry the column.
fn tokenize(line: &str, number: usize) -> Result<Vec<Tok>, Diagnostic> {
    let mut toks = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if is_ident_start(c) {
            let start = i;
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            match word.to_ascii_lowercase().as_str() {
                "free" => toks.push(Tok::Free),
                "inf" | "infinity" => toks.push(Tok::Inf(true)),
                _ => toks.push(Tok::Ident(word)),
            }
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            // exponent part
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let word: String = chars[start..i].iter().collect();
            let value: f64 = word.parse().map_err(|_| {
                Diagnostic::error(
                    codes::MALFORMED_EXPRESSION,
                    format!("cannot parse number {word:?}"),
                )
                .at(number, start + 1)
            })?;
            toks.push(Tok::Num(value));
            continue;
        }
        match c {
            '+' => {
                // +inf / +infinity
                if line[idx_to_byte(&chars, i + 1)..]
                    .to_ascii_lowercase()
                    .starts_with("inf")
                {
                    let mut j = i + 1;
                    while j < chars.len() && chars[j].is_ascii_alphabetic() {
                        j += 1;
                    }
                    toks.push(Tok::Inf(true));
                    i = j;
                } else {
                    toks.push(Tok::Plus);
                    i += 1;
                }
            }
            '-' => {
                if line[idx_to_byte(&chars, i + 1)..]
                    .to_ascii_lowercase()
                    .starts_with("inf")
                {
                    let mut j = i + 1;
                    while j < chars.len() && chars[j].is_ascii_alphabetic() {
                        j += 1;
                    }
                    toks.push(Tok::Inf(false));
                    i = j;
                } else {
                    toks.push(Tok::Minus);
                    i += 1;
                }
            }
            '<' => {
                toks.push(Tok::Sense(ConstraintSense::Le));
                i += 1;
                if i < chars.len() && chars[i] == '=' {
                    i += 1;
                }
            }
            '>' => {
                toks.push(Tok::Sense(ConstraintSense::Ge));
                i += 1;
                if i < chars.len() && chars[i] == '=' {
                    i += 1;
                }
            }
            '=' => {
                toks.push(Tok::Sense(ConstraintSense::Eq));
                i += 1;
            }
            ':' => {
                toks.push(Tok::Colon);
                i += 1;
            }
            other => {
                return Err(Diagnostic::error(
                    codes::MALFORMED_EXPRESSION,
                    format!("unexpected character {other:?}"),
                )
                .at(number, i + 1));
            }
        }
    }
    Ok(toks)
}

fn idx_to_byte(chars: &[char], idx: usize) -> usize {
    chars[..idx.min(chars.len())].iter().map(|c| c.len_utf8()).sum()
}

fn header_of(line: &str) -> Option<Section> {
    let lowered = line.trim().to_ascii_lowercase();
    match lowered.as_str() {
        "minimize" => Some(Section::Objective),
        "maximize" => Some(Section::Objective),
        "subject to" => Some(Section::Constraints),
        "bounds" => Some(Section::Bounds),
        "general" => Some(Section::General),
        "binary" => Some(Section::Binary),
        "end" => Some(Section::End),
        _ => None,
    }
}

/// Parse a sign-aware linear expression from a token slice. Returns the
/// expression and how many tokens were consumed. A single literal `0` is
/// the empty expression.
fn parse_expr(
    toks: &[Tok],
    line: usize,
    allow_empty_zero: bool,
) -> Result<(LinearExpression, usize), Diagnostic> {
    let mut expr = LinearExpression::zero();
    let mut i = 0;
    let mut sign = 1.0;
    let mut expect_term = true; // after a sign or at start
    let mut any = false;
    if allow_empty_zero && toks.len() == 1 {
        if let Tok::Num(v) = toks[0] {
            if v == 0.0 {
                return Ok((LinearExpression::zero(), 1));
            }
        }
    }
    while i < toks.len() {
        match &toks[i] {
            Tok::Plus => {
                if expect_term {
                    // unary plus at start only
                    if any {
                        return Err(malformed(line, "dangling `+`"));
                    }
                }
                sign = 1.0;
                expect_term = true;
                i += 1;
            }
            Tok::Minus => {
                if expect_term && any {
                    return Err(malformed(line, "dangling `-`"));
                }
                sign = -1.0;
                expect_term = true;
                i += 1;
            }
            Tok::Num(v) => {
                if !expect_term {
                    return Err(malformed(line, "number after a completed term"));
                }
                // must be followed by an identifier
                match toks.get(i + 1) {
                    Some(Tok::Ident(name)) => {
                        expr.add_term(sign * *v, name.clone());
                        any = true;
                        sign = 1.0;
                        expect_term = false;
                        i += 2;
                    }
                    _ => {
                        return Err(malformed(
                            line,
                            format!("coefficient {v} is not followed by a variable"),
                        ));
                    }
                }
            }
            Tok::Ident(name) => {
                if !expect_term && any {
                    return Err(malformed(
                        line,
                        format!("variable {name:?} follows a term without an operator"),
                    ));
                }
                expr.add_term(sign, name.clone());
                any = true;
                sign = 1.0;
                expect_term = false;
                i += 1;
            }
            _ => break,
        }
    }
    if expect_term && any {
        return Err(malformed(line, "expression ends with an operator"));
    }
    Ok((expr, i))
}

fn malformed(line: usize, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::error(codes::MALFORMED_EXPRESSION, msg).at(line, 1)
}

/// Parse LP text, also reporting raw-section facts. All errors are
/// collected where recovery is possible; the function fails with the full
/// list.
pub fn parse_lp_detailed(text: &str) -> Result<ParseOutput, Vec<Diagnostic>> {
    let mut errors: Vec<Diagnostic> = Vec::new();
    let mut metadata: Vec<(String, String)> = Vec::new();
    // comment headers attached to the next constraint line
    let mut pending_comment: Option<String> = None;
    let mut comment_for: Vec<(String, String)> = Vec::new();

    let mut sense = ObjectiveSense::Minimize;
    let mut objective_tokens: Vec<Line> = Vec::new();
    let mut constraint_lines: Vec<(Line, Option<String>)> = Vec::new();
    let mut bound_lines: Vec<Line> = Vec::new();
    let mut general_lines: Vec<Line> = Vec::new();
    let mut binary_lines: Vec<Line> = Vec::new();

    let mut section = Section::Preamble;
    let mut saw_objective_header = false;
    let mut saw_end = false;

    for (idx, raw) in text.lines().enumerate() {
        let number = idx + 1;
        // comment handling: "\ meta k = v" restores metadata, "\ --- t ---"
        // is a block header for the next constraint; other comments drop.
        let (content, comment) = match raw.find('\\') {
            Some(pos) => (&raw[..pos], Some(raw[pos + 1..].trim().to_string())),
            None => (raw, None),
        };
        if let Some(c) = comment {
            if let Some(rest) = c.strip_prefix("meta ") {
                if let Some((k, v)) = rest.split_once('=') {
                    metadata.push((k.trim().to_string(), v.trim().to_string()));
                }
            } else if c.starts_with("---") && c.ends_with("---") && section == Section::Constraints
            {
                pending_comment = Some(c);
            }
        }
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        if saw_end {
            errors.push(
                Diagnostic::error(codes::UNKNOWN_SECTION, "content after End").at(number, 1),
            );
            continue;
        }
        if let Some(target) = header_of(trimmed) {
            match target {
                Section::Objective => {
                    if saw_objective_header {
                        errors.push(
                            Diagnostic::error(codes::UNKNOWN_SECTION, "duplicate objective section")
                                .at(number, 1),
                        );
                    }
                    saw_objective_header = true;
                    sense = if trimmed.to_ascii_lowercase() == "maximize" {
                        ObjectiveSense::Maximize
                    } else {
                        ObjectiveSense::Minimize
                    };
                }
                Section::End => saw_end = true,
                _ => {}
            }
            section = target;
            continue;
        }
        let line = match tokenize(trimmed, number) {
            Ok(toks) => Line { number, toks },
            Err(d) => {
                errors.push(d);
                continue;
            }
        };
        match section {
            Section::Preamble => {
                errors.push(
                    Diagnostic::error(
                        codes::UNKNOWN_SECTION,
                        format!("unexpected content before any section header: {trimmed:?}"),
                    )
                    .at(number, 1),
                );
            }
            Section::Objective => objective_tokens.push(line),
            Section::Constraints => {
                constraint_lines.push((line, pending_comment.take()));
            }
            Section::Bounds => bound_lines.push(line),
            Section::General => general_lines.push(line),
            Section::Binary => binary_lines.push(line),
            Section::End => unreachable!(),
        }
    }

    if !saw_end {
        let last = text.lines().count();
        errors.push(Diagnostic::error(codes::MISSING_END, "missing End marker").at(last.max(1), 1));
    }
    if !saw_objective_header {
        errors.push(Diagnostic::error(
            codes::UNKNOWN_SECTION,
            "missing Minimize/Maximize section",
        ));
    }

    // objective: optional leading "name:" then an expression over all lines
    let mut objective_name = "obj".to_string();
    let mut flat: Vec<Tok> = Vec::new();
    let mut obj_line = 1;
    for (i, l) in objective_tokens.iter().enumerate() {
        if i == 0 {
            obj_line = l.number;
        }
        flat.extend(l.toks.iter().cloned());
    }
    if flat.len() >= 2 {
        if let (Tok::Ident(name), Tok::Colon) = (&flat[0], &flat[1]) {
            objective_name = name.clone();
            flat.drain(..2);
        }
    }
    let objective = match parse_expr(&flat, obj_line, true) {
        Ok((expr, used)) => {
            if used != flat.len() {
                errors.push(malformed(obj_line, "trailing tokens in objective"));
                LinearExpression::zero()
            } else {
                expr
            }
        }
        Err(d) => {
            errors.push(d);
            LinearExpression::zero()
        }
    };

    let mut model = Model::new(sense, objective_name, objective);
    for (k, v) in metadata {
        model.metadata.insert(k, v);
    }

    // constraints: token stream split at `name:` boundaries; each constraint
    // completes at sense + rhs.
    let mut stream: Vec<(Tok, usize)> = Vec::new();
    let mut line_comments: Vec<(usize, String)> = Vec::new(); // stream index -> comment
    for (l, comment) in constraint_lines {
        if let Some(c) = comment {
            line_comments.push((stream.len(), c));
        }
        for t in l.toks {
            stream.push((t, l.number));
        }
    }
    let mut auto_name = 0usize;
    let mut pos = 0usize;
    while pos < stream.len() {
        let start_pos = pos;
        let start_line = stream[pos].1;
        // optional name:
        let name = if pos + 1 < stream.len()
            && matches!(stream[pos].0, Tok::Ident(_))
            && matches!(stream[pos + 1].0, Tok::Colon)
        {
            let Tok::Ident(n) = stream[pos].0.clone() else { unreachable!() };
            pos += 2;
            n
        } else {
            auto_name += 1;
            format!("c{auto_name}")
        };
        // expression until sense
        let toks: Vec<Tok> = stream[pos..].iter().map(|(t, _)| t.clone()).collect();
        let (expr, used) = match parse_expr(&toks, start_line, false) {
            Ok(r) => r,
            Err(d) => {
                errors.push(d);
                break;
            }
        };
        pos += used;
        let Some((Tok::Sense(sense_tok), sense_line)) = stream.get(pos).cloned() else {
            errors.push(malformed(start_line, format!("constraint {name:?} has no sense token")));
            break;
        };
        pos += 1;
        // rhs: optional sign + number
        let mut rhs_sign = 1.0;
        if let Some((Tok::Minus, _)) = stream.get(pos) {
            rhs_sign = -1.0;
            pos += 1;
        } else if let Some((Tok::Plus, _)) = stream.get(pos) {
            pos += 1;
        }
        let Some((Tok::Num(rhs), _)) = stream.get(pos).cloned() else {
            errors.push(malformed(sense_line, format!("constraint {name:?} has no right-hand side")));
            break;
        };
        pos += 1;
        match NamedConstraint::new(name.clone(), expr, sense_tok, rhs_sign * rhs) {
            Ok(c) => {
                if let Err(e) = model.add_constraint(c) {
                    errors.push(
                        Diagnostic::error(codes::DUPLICATE_NAME, e.to_string()).at(start_line, 1),
                    );
                }
            }
            Err(e) => {
                errors.push(malformed(start_line, e.to_string()));
            }
        }
        // attach a block-header comment if one pointed at this constraint
        for (at, c) in &line_comments {
            if *at == start_pos {
                comment_for.push((name.clone(), c.clone()));
            }
        }
    }

    // bounds: one entry per line
    let mut raw_bound_vars = BTreeSet::new();
    for l in bound_lines {
        match parse_bound_line(&l) {
            Ok((var, lo, hi)) => {
                raw_bound_vars.insert(var.clone());
                if !model.has_variable(&var) {
                    errors.push(
                        Diagnostic::error(
                            codes::DANGLING_DECLARATION,
                            format!("bounds entry for {var:?}, which appears in no constraint or objective"),
                        )
                        .at(l.number, 1),
                    );
                    continue;
                }
                if let Err(e) = model.set_bounds(&var, lo, hi) {
                    errors.push(malformed(l.number, e.to_string()));
                }
            }
            Err(d) => errors.push(d),
        }
    }

    // integrality sections
    let mut raw_general_vars = BTreeSet::new();
    let mut raw_binary_vars = BTreeSet::new();
    for (lines, kind, raw_set) in [
        (&general_lines, VarKind::Integer, &mut raw_general_vars),
        (&binary_lines, VarKind::Binary, &mut raw_binary_vars),
    ] {
        for l in lines.iter() {
            for t in &l.toks {
                match t {
                    Tok::Ident(name) => {
                        raw_set.insert(name.clone());
                        if !model.has_variable(name) {
                            errors.push(
                                Diagnostic::error(
                                    codes::DANGLING_DECLARATION,
                                    format!(
                                        "integrality declaration for {name:?}, which appears in no constraint or objective"
                                    ),
                                )
                                .at(l.number, 1),
                            );
                        } else if let Err(e) = model.set_kind(name, kind) {
                            errors.push(malformed(l.number, e.to_string()));
                        }
                    }
                    _ => errors.push(malformed(
                        l.number,
                        "integrality sections list variable names only",
                    )),
                }
            }
        }
    }

    for (name, comment) in comment_for {
        model
            .metadata
            .insert(format!("comment_before.{name}"), comment);
    }

    if errors.is_empty() {
        Ok(ParseOutput {
            model,
            raw_bound_vars,
            raw_general_vars,
            raw_binary_vars,
        })
    } else {
        Err(errors)
    }
}

/// Bounds entry forms: `x free`, `x <= u`, `x >= l`, `x = v`,
/// `l <= x <= u`, with `-inf`/`+inf`/`inf` accepted in numeric positions.
fn parse_bound_line(l: &Line) -> Result<(String, f64, f64), Diagnostic> {
    let t = &l.toks;
    let num = |tok: &Tok| -> Option<f64> {
        match tok {
            Tok::Num(v) => Some(*v),
            Tok::Inf(pos) => Some(if *pos { f64::INFINITY } else { f64::NEG_INFINITY }),
            _ => None,
        }
    };
    let signed_num = |a: &Tok, b: Option<&Tok>| -> Option<(f64, usize)> {
        match a {
            Tok::Minus => b.and_then(num).map(|v| (-v, 2)),
            Tok::Plus => b.and_then(num).map(|v| (v, 2)),
            _ => num(a).map(|v| (v, 1)),
        }
    };
    let err = || {
        Diagnostic::error(codes::MALFORMED_EXPRESSION, "malformed bounds entry").at(l.number, 1)
    };
    // x free
    if t.len() == 2 {
        if let (Tok::Ident(v), Tok::Free) = (&t[0], &t[1]) {
            return Ok((v.clone(), f64::NEG_INFINITY, f64::INFINITY));
        }
    }
    // x sense value
    if t.len() >= 3 {
        if let (Tok::Ident(v), Tok::Sense(s)) = (&t[0], &t[1]) {
            let Some((value, used)) = signed_num(&t[2], t.get(3)) else {
                return Err(err());
            };
            if 2 + used != t.len() {
                return Err(err());
            }
            return Ok(match s {
                ConstraintSense::Le => (v.clone(), 0.0, value),
                ConstraintSense::Ge => (v.clone(), value, f64::INFINITY),
                ConstraintSense::Eq => (v.clone(), value, value),
            });
        }
    }
    // value <= x [<= value]
    if let Some((lo, used)) = signed_num(&t[0], t.get(1)) {
        let rest = &t[used..];
        if rest.len() >= 2 {
            if let (Tok::Sense(ConstraintSense::Le), Tok::Ident(v)) = (&rest[0], &rest[1]) {
                if rest.len() == 2 {
                    return Ok((v.clone(), lo, f64::INFINITY));
                }
                if let Tok::Sense(ConstraintSense::Le) = rest[2] {
                    if let Some((hi, used2)) = signed_num(&rest[3], rest.get(4)) {
                        if 3 + used2 == rest.len() {
                            return Ok((v.clone(), lo, hi));
                        }
                    }
                }
            }
            if let (Tok::Sense(ConstraintSense::Ge), Tok::Ident(v)) = (&rest[0], &rest[1]) {
                if rest.len() == 2 {
                    return Ok((v.clone(), f64::NEG_INFINITY, lo));
                }
            }
        }
    }
    Err(err())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_well_formed_file() {
        let m = parse_lp("Minimize\n obj: x + 2 y\nSubject To\n c1: x + y >= 1\nEnd\n").unwrap();
        assert_eq!(m.variables().len(), 2);
        assert_eq!(m.constraints().len(), 1);
        assert_eq!(m.effective_bounds("x"), (0.0, f64::INFINITY));
        assert_eq!(m.effective_bounds("y"), (0.0, f64::INFINITY));
        assert_eq!(m.sense, ObjectiveSense::Minimize);
    }

    #[test]
    fn batch_constraint_terms() {
        let m = parse_lp(
            "Minimize\n obj: q_1_1\nSubject To\n batch_1_1: q_1_1 - 100 k_1_1 = 0\nEnd\n",
        )
        .unwrap();
        let c = m.constraint("batch_1_1").unwrap();
        assert_eq!(c.sense, ConstraintSense::Eq);
        assert_eq!(c.rhs, 0.0);
        assert_eq!(c.expression.coef_of("q_1_1"), Some(1.0));
        assert_eq!(c.expression.coef_of("k_1_1"), Some(-100.0));
    }

    #[test]
    fn missing_end_is_reported_with_line() {
        let errs = parse_lp("Minimize\n obj: x\nSubject To\n c1: x >= 1\n").unwrap_err();
        assert!(errs.iter().any(|d| d.code == codes::MISSING_END && d.location.is_some()));
    }

    #[test]
    fn duplicate_constraint_name_is_reported() {
        let errs =
            parse_lp("Minimize\n obj: x\nSubject To\n c: x >= 1\n c: x <= 2\nEnd\n").unwrap_err();
        assert!(errs.iter().any(|d| d.code == codes::DUPLICATE_NAME));
    }

    #[test]
    fn unknown_section_header() {
        let errs = parse_lp("Minimize\n obj: x\nFrobnicate\nEnd\n").unwrap_err();
        assert!(errs.iter().any(|d| d.code == codes::MALFORMED_EXPRESSION
            || d.code == codes::UNKNOWN_SECTION));
    }

    #[test]
    fn rejects_crooked_sense_token() {
        // "=<" lexes as Eq then Le, which cannot form a valid constraint
        let errs = parse_lp("Minimize\n obj: x\nSubject To\n c1: x =< 1\nEnd\n").unwrap_err();
        assert!(errs.iter().any(|d| d.code == codes::MALFORMED_EXPRESSION));
    }

    #[test]
    fn bounds_forms() {
        let m = parse_lp(
            "Minimize\n obj: a + b + c + d + e\nSubject To\n c1: a + b + c + d + e >= 1\nBounds\n a free\n b <= 5\n 2 <= c <= 4\n d >= -3\n e = 7\nEnd\n",
        )
        .unwrap();
        assert_eq!(m.effective_bounds("a"), (f64::NEG_INFINITY, f64::INFINITY));
        assert_eq!(m.effective_bounds("b"), (0.0, 5.0));
        assert_eq!(m.effective_bounds("c"), (2.0, 4.0));
        assert_eq!(m.effective_bounds("d"), (-3.0, f64::INFINITY));
        assert_eq!(m.effective_bounds("e"), (7.0, 7.0));
    }

    #[test]
    fn multiline_constraint_continues_until_rhs() {
        let m = parse_lp("Minimize\n obj: x\nSubject To\n c1: x +\n y >= 1\nEnd\n").unwrap();
        let c = m.constraint("c1").unwrap();
        assert_eq!(c.expression.len(), 2);
    }

    #[test]
    fn unnamed_constraints_are_auto_named() {
        let m = parse_lp("Minimize\n obj: x\nSubject To\n x + y >= 1\nEnd\n").unwrap();
        assert!(m.constraint("c1").is_some());
    }

    #[test]
    fn integrality_sections() {
        let m = parse_lp(
            "Minimize\n obj: x + k + u\nSubject To\n c1: x + k + u >= 1\nGeneral\n k\nBinary\n u\nEnd\n",
        )
        .unwrap();
        assert_eq!(m.var_kind("k"), VarKind::Integer);
        assert_eq!(m.var_kind("u"), VarKind::Binary);
        assert_eq!(m.effective_bounds("u"), (0.0, 1.0));
    }

    #[test]
    fn dangling_declaration_is_error() {
        let errs =
            parse_lp("Minimize\n obj: x\nSubject To\n c1: x >= 1\nGeneral\n ghost\nEnd\n")
                .unwrap_err();
        assert!(errs.iter().any(|d| d.code == codes::DANGLING_DECLARATION));
    }

    #[test]
    fn meta_comments_restore_metadata() {
        let m = parse_lp(
            "\\ meta origin = test\nMinimize\n obj: x\nSubject To\n c1: x >= 1\nEnd\n",
        )
        .unwrap();
        assert_eq!(m.metadata.get("origin").map(String::as_str), Some("test"));
    }

    #[test]
    fn zero_objective_literal() {
        let m = parse_lp("Minimize\n obj: 0\nSubject To\n c1: x >= 1\nEnd\n").unwrap();
        assert!(m.objective.is_empty());
        assert_eq!(m.variables(), vec!["x"]);
    }

    #[test]
    fn coefficient_without_variable_is_malformed() {
        let errs = parse_lp("Minimize\n obj: x\nSubject To\n c1: x + 3 >= 1\nEnd\n").unwrap_err();
        assert!(errs.iter().any(|d| d.code == codes::MALFORMED_EXPRESSION));
    }
}
