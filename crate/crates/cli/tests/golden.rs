//! Byte-stable golden outputs for the script corpus in `tests/golden/`.

use std::path::Path;

#[test]
fn golden_corpus_is_byte_stable() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "ks"))
        .collect();
    paths.sort();
    assert!(
        paths.len() >= 12,
        "expected at least 12 golden scripts, found {}",
        paths.len()
    );
    for path in paths {
        let src = std::fs::read_to_string(&path).unwrap();
        let expected = std::fs::read_to_string(path.with_extension("out")).unwrap();
        let outcome = extensor_cli::run_script(&src, extensor_cli::Format::Text);
        assert_eq!(outcome.code, 0, "{}: {}", path.display(), outcome.stderr);
        assert_eq!(
            outcome.stdout,
            expected,
            "{}: output drifted",
            path.display()
        );
    }
}

/// Printed text is itself valid input that evaluates back to an equal value.
#[test]
fn rendered_output_reparses_to_equal_value() {
    // each entry: the expression, plus a probe application turning the value
    // into something `assert` can compare (empty for element-valued results)
    let exprs = [
        ("2 e1^e2 - 3 e3 + e1", ""),
        ("lc(w1 + 2 w1^w3, e1^e2^e3)", ""),
        ("rc(w2^w3, e1 + e2^e3)", ""),
        ("sp(w1^w2, e1^e2) * (e1 + e2)", ""),
        ("rev(e1^e2^e3 + e1)", ""),
        ("ginv(w1 + w1^w2)", ""),
        ("ext([[1,2,0],[0,1,0],[3,0,1]])", "(e1^e2 + e3)"),
        ("gen([[0,1,0],[0,0,1],[1,0,0]])", "(e1^e2 + e3)"),
        ("ext(adj([[1,2,0],[0,1,0],[3,0,1]]))", "(w1 + 2 w3)"),
        (
            "extensor(v{1} -> f{1,2}; [e1] = w2 + 2 w1^w2; [e2] = w1; [e3] = 3 w3)",
            "(e1 + 4 e2)",
        ),
        (
            "extensor(v{1}, f{1} -> v{0,2}; [e1, w1] = e1^e2; [e2, w2] = 5; [e3, w3] = e2^e3)",
            "(e1 + e2, w1 - w2)",
        ),
        ("ext(inv([[2,0,0],[0,1,0],[0,0,1]]))", "(e1 + e2)"),
    ];
    for (expr, probe) in exprs {
        let first = extensor_cli::run_expr(expr, 3, extensor_cli::Format::Text);
        assert_eq!(first.code, 0, "{expr}: {}", first.stderr);
        let rendered = first.stdout.trim_end();
        // re-rendering must be idempotent
        let second = extensor_cli::run_expr(rendered, 3, extensor_cli::Format::Text);
        assert_eq!(
            second.code, 0,
            "{expr} re-parse of `{rendered}`: {}",
            second.stderr
        );
        assert_eq!(second.stdout, first.stdout, "{expr}: not canonical");
        // and the round trip must evaluate to an equal value
        let script =
            format!("dim 3\nlet a = {expr}\nlet b = {rendered}\nassert a{probe} == b{probe}\n");
        let check = extensor_cli::run_script(&script, extensor_cli::Format::Text);
        assert_eq!(
            check.code, 0,
            "{expr}: round trip differs: {}",
            check.stderr
        );
    }
}
