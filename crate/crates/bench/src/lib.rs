//! Synthetic inputs shared by the benchmarks.

/// A snippet of roughly `lines` physical lines mixing imports, nested
/// imports, strings that look like imports, and ordinary code.
pub fn synthetic_snippet(lines: usize) -> String {
    let mut out = String::with_capacity(lines * 32);
    let mut i = 0;
    while out.lines().count() < lines {
        match i % 6 {
            0 => out.push_str(&format!("import pkg{i}.sub as alias{i}\n")),
            1 => out.push_str(&format!("from mod{i} import (a,\n    b, c)\n")),
            2 => out.push_str(&format!("text{i} = \"\"\"\nimport not_real{i}\n\"\"\"\n")),
            3 => out.push_str(&format!(
                "def f{i}(x):\n    if x: import inner{i}\n    return x * {i}\n"
            )),
            4 => out.push_str(&format!(
                "value{i} = [n for n in range({i})]  # import comment\n"
            )),
            _ => out.push_str(&format!(
                "try:\n    import opt{i}\nexcept ImportError:\n    opt{i} = None\n"
            )),
        }
        i += 1;
    }
    out
}
