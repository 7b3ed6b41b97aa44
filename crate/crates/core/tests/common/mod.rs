//! Fixed command lines with their exact expected output.

#![allow(dead_code)]

use std::process::Command;

pub struct Golden {
    pub args: &'static [&'static str],
    pub code: i32,
    pub stdout: &'static str,
    pub stderr: &'static str,
}

pub const GOLDEN: &[Golden] = &[
    Golden {
        args: &["pow-check", "--field", "p=2", "x"],
        code: 0,
        stdout: "OK: (d+x)^2 = d^2+x^2+1\n",
        stderr: "",
    },
    Golden {
        // f'' = 2 and f^3 = x^6
        args: &["pow-check", "--field", "p=3", "x^2"],
        code: 0,
        stdout: "OK: (d+x^2)^3 = d^3+x^6+2\n",
        stderr: "",
    },
    Golden {
        // (x+1)^2 + 1 = x^2 over F_2
        args: &["theta", "--field", "p=2", "x+1"],
        code: 0,
        stdout: "x^2\n",
        stderr: "",
    },
    Golden {
        args: &["theta", "X"],
        code: 2,
        stdout: "",
        stderr: "error: X not valid in a K[x] expression\n",
    },
    Golden {
        args: &["theta-inv", "--field", "p=2", "x^2"],
        code: 0,
        stdout: "x+1\n",
        stderr: "",
    },
    Golden {
        args: &["theta-inv", "--field", "p=3", "x^3"],
        code: 0,
        stdout: "x\n",
        stderr: "",
    },
    Golden {
        // θ(x^2) = x^4 + 2x = x^4 over F_2
        args: &["theta-inv", "--field", "p=2", "x^4"],
        code: 0,
        stdout: "x^2\n",
        stderr: "",
    },
    Golden {
        args: &["theta-inv", "--json", "--field", "p=2", "x^2"],
        code: 0,
        stdout: "{\"checks\":{\"oracle_agrees\":true},\"field\":\"p=2\",\"kind\":\"theta-inv\",\"result\":\"x+1\"}\n",
        stderr: "",
    },
    Golden {
        // (d+x)^2 = d^2 + x^2 + 1
        args: &["res", "--field", "p=2", "phi[x]"],
        code: 0,
        stdout: "(X ; X+Y+1)\n",
        stderr: "",
    },
    Golden {
        args: &["res", "--field", "p=3", "s"],
        code: 0,
        stdout: "(Y ; 2*X)\n",
        stderr: "",
    },
    Golden {
        args: &["res-inv", "--field", "p=2", "phi[X]"],
        code: 0,
        stdout: "(x ; d+x+1)\nphi[x+1]\n",
        stderr: "",
    },
    Golden {
        args: &["res-inv", "--field", "p=3", "gamma[2]"],
        code: 2,
        stdout: "",
        stderr: "error: not in the Jacobian-one subgroup: Jacobian is 2\n",
    },
    Golden {
        args: &["decompose", "--field", "p=3", "(X ; Y+X^2)"],
        code: 0,
        stdout: "phi[X^2]\n",
        stderr: "",
    },
    Golden {
        // the rotation (Y, -X) over F_5
        args: &["decompose", "--field", "p=5", "(Y ; 4*X)"],
        code: 0,
        stdout: "s\n",
        stderr: "",
    },
    Golden {
        args: &["decompose", "--field", "p=2", "(X^2 ; Y)"],
        code: 2,
        stdout: "",
        stderr: "error: not an automorphism: leading forms are not proportional\n",
    },
    Golden {
        // s s = t[-1]
        args: &["compose", "--field", "p=5", "s", "s"],
        code: 0,
        stdout: "(4*X ; 4*Y)\n",
        stderr: "",
    },
    Golden {
        args: &["compose", "--field", "p=3", "phi[x]", "phi[x^2]"],
        code: 0,
        stdout: "(x ; d+x^2+x)\n",
        stderr: "",
    },
    Golden {
        // det [[1, 2Y], [0, 1]]
        args: &["jacobian", "--field", "p=3", "(X+Y^2 ; Y)"],
        code: 0,
        stdout: "1\n",
        stderr: "",
    },
    Golden {
        args: &["fuzz", "thm17", "--count", "100", "--seed", "7"],
        code: 0,
        stdout: "100/100 OK\n",
        stderr: "",
    },
    Golden {
        args: &["fuzz", "res-rt", "--field", "p=3", "--count", "20", "--seed", "1"],
        code: 0,
        stdout: "20/20 OK\n",
        stderr: "",
    },
];

/// Runs the built binary; returns `None` when output matches, else a
/// description of the difference.
pub fn check(g: &Golden) -> Option<String> {
    let out = Command::new(env!("CARGO_BIN_EXE_weylres"))
        .args(g.args)
        .output()
        .expect("run weylres");
    let stdout = String::from_utf8_lossy(&out.stdout);
    let stderr = String::from_utf8_lossy(&out.stderr);
    let code = out.status.code().unwrap_or(-1);
    if code == g.code && stdout == g.stdout && stderr == g.stderr {
        None
    } else {
        Some(format!(
            "weylres {}: got code {code}, stdout {stdout:?}, stderr {stderr:?}",
            g.args.join(" ")
        ))
    }
}
