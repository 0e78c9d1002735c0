#![allow(dead_code)]

use fricke::Polynomial;

/// Rank-four coordinates written one letter each: `l..z` stand for
/// `a, b, c, d, ab, ac, ad, bc, bd, cd, abc, abd, acd, bcd, abcd`.
pub const LETTERS: [(char, &str); 15] = [
    ('l', "a"),
    ('m', "b"),
    ('n', "c"),
    ('o', "d"),
    ('p', "ab"),
    ('q', "ac"),
    ('r', "ad"),
    ('s', "bc"),
    ('t', "bd"),
    ('u', "cd"),
    ('v', "abc"),
    ('w', "abd"),
    ('x', "acd"),
    ('y', "bcd"),
    ('z', "abcd"),
];

pub fn translate(compact: &str) -> Polynomial {
    let mut out = String::new();
    let mut prev = ' ';
    for ch in compact.chars() {
        match LETTERS.iter().find(|(c, _)| *c == ch) {
            Some((_, name)) => {
                if prev.is_ascii_alphanumeric() {
                    out.push('*');
                }
                out.push_str(name);
            }
            None => out.push(ch),
        }
        prev = ch;
    }
    Polynomial::parse(4, &out).unwrap()
}

/// Printed images of the coordinates under `T`, `P`, `R`, `I`, in basis order.
pub const MAPS_RANK_TWO: [[&str; 3]; 4] = [
    ["ab", "b", "b*ab - a"],
    ["b", "a", "ab"],
    ["b", "a", "ab"],
    ["a", "b", "a*b - ab"],
];

pub const MAPS_RANK_THREE: [[&str; 7]; 4] = [
    ["ab", "b", "c", "b*ab - a", "abc", "bc", "b*abc - ac"],
    [
        "b",
        "a",
        "c",
        "ab",
        "bc",
        "ac",
        "-a*b*c + a*bc + b*ac + c*ab - abc",
    ],
    ["b", "c", "a", "bc", "ab", "ac", "abc"],
    ["a", "b", "c", "a*b - ab", "a*c - ac", "bc", "a*bc - abc"],
];

/// Rank-four images in the letters of [`LETTERS`].
pub const MAPS_RANK_FOUR: [[&str; 15]; 4] = [
    [
        "p", "m", "n", "o", "mp-l", "v", "w", "s", "t", "u", "mv-q", "mw-r", "z", "y", "mz-x",
    ],
    [
        "m",
        "l",
        "n",
        "o",
        "p",
        "s",
        "t",
        "q",
        "r",
        "u",
        "-lmn+ls+mq+np-v",
        "-lmo+lt+mr+op-w",
        "y",
        "x",
        "-lmu+ly+mx+pu-z",
    ],
    [
        "m", "n", "o", "l", "s", "t", "p", "u", "q", "r", "y", "v", "w", "x", "z",
    ],
    [
        "l", "m", "n", "o", "lm-p", "ln-q", "lo-r", "s", "t", "u", "ls-v", "lt-w", "lu-x", "y",
        "ly-z",
    ],
];

pub fn printed_map(n: usize, k: usize) -> Vec<Polynomial> {
    match n {
        2 => MAPS_RANK_TWO[k]
            .iter()
            .map(|s| Polynomial::parse(2, s).unwrap())
            .collect(),
        3 => MAPS_RANK_THREE[k]
            .iter()
            .map(|s| Polynomial::parse(3, s).unwrap())
            .collect(),
        4 => MAPS_RANK_FOUR[k].iter().map(|s| translate(s)).collect(),
        _ => panic!("no printed maps at rank {n}"),
    }
}
