//! Brute-force reference implementations for the integration tests.
//!
//! Everything here works on raw arrays (`picks[mask]` is the item chosen
//! from the menu with that bitmask) and shares no code with the library
//! beyond conversion at the boundary.

#![allow(dead_code)]

use choice_census::{ChoiceFunction, GroundSet};

pub type Picks = [u8; 16];

/// Menu masks of size at least two, ascending.
pub fn menus(n: usize) -> Vec<u8> {
    (0u8..1 << n).filter(|m| m.count_ones() >= 2).collect()
}

pub fn members(mask: u8) -> Vec<u8> {
    (0..8).filter(|i| mask & (1 << i) != 0).collect()
}

pub fn pair(x: u8, y: u8) -> u8 {
    (1 << x) | (1 << y)
}

pub fn to_picks(c: &ChoiceFunction) -> Picks {
    let mut out = [0u8; 16];
    for mask in 1u8..1 << c.n() {
        out[mask as usize] = c.pick(choice_census::Menu::from_bits(mask)) as u8;
    }
    out
}

pub fn from_picks(n: usize, picks: &Picks) -> ChoiceFunction {
    ChoiceFunction::from_fn(n, |m| picks[m.bits() as usize] as usize)
        .expect("oracle picks are members")
}

/// Every labeled choice on `n` items, singletons filled in.
pub fn all_labeled(n: usize) -> Vec<Picks> {
    let ms = menus(n);
    let mut out = vec![singletons(n)];
    for &m in &ms {
        let mut next = Vec::with_capacity(out.len() * m.count_ones() as usize);
        for base in &out {
            for x in members(m) {
                let mut p = *base;
                p[m as usize] = x;
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn singletons(n: usize) -> Picks {
    let mut p = [0u8; 16];
    for i in 0..n {
        p[1 << i] = i as u8;
    }
    p
}

/// All permutations of `0..n` as image vectors.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    fn go(prefix: &mut Vec<u8>, n: usize, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n as u8 {
            if !prefix.contains(&x) {
                prefix.push(x);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

pub fn image(mask: u8, sigma: &[u8]) -> u8 {
    members(mask)
        .into_iter()
        .fold(0, |acc, i| acc | (1 << sigma[i as usize]))
}

/// `c'(σ(A)) = σ(c(A))`.
pub fn relabel(p: &Picks, n: usize, sigma: &[u8]) -> Picks {
    let mut out = [0u8; 16];
    for mask in 1u8..1 << n {
        out[image(mask, sigma) as usize] = sigma[p[mask as usize] as usize];
    }
    out
}

/// Smallest relabeling, comparing picks over menus in ascending mask order.
pub fn min_form(p: &Picks, n: usize) -> Vec<u8> {
    let ms = menus(n);
    permutations(n)
        .iter()
        .map(|s| {
            let q = relabel(p, n, s);
            ms.iter().map(|&m| q[m as usize]).collect::<Vec<u8>>()
        })
        .min()
        .expect("at least one permutation")
}

/// An asymmetric relation as a 4x4 adjacency matrix.
pub type Rel = [[bool; 4]; 4];

pub fn rel(edges: &[(u8, u8)]) -> Rel {
    let mut r = [[false; 4]; 4];
    for &(x, y) in edges {
        r[x as usize][y as usize] = true;
    }
    r
}

/// Parses `"a>b, b>d"` over the standard labels.
pub fn rel_labels(text: &str) -> Rel {
    let label = |c: char| "abde".find(c).expect("standard label") as u8;
    let edges: Vec<(u8, u8)> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|e| {
            let mut cs = e.chars().filter(|c| *c != '>');
            (label(cs.next().unwrap()), label(cs.next().unwrap()))
        })
        .collect();
    rel(&edges)
}

/// Every pair of a linear order given best first, e.g. `"abde"`.
pub fn chain(order: &str) -> Rel {
    let label = |c: char| "abde".find(c).expect("standard label") as u8;
    let items: Vec<u8> = order.chars().map(label).collect();
    let mut edges = Vec::new();
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            edges.push((items[i], items[j]));
        }
    }
    rel(&edges)
}

pub fn max_set(r: &Rel, mask: u8) -> u8 {
    let ms = members(mask);
    ms.iter()
        .filter(|&&y| !ms.iter().any(|&x| r[x as usize][y as usize]))
        .fold(0, |acc, &y| acc | (1 << y))
}

/// Whether applying `list` in order leaves exactly `c(A)` in every menu.
pub fn list_reproduces(p: &Picks, n: usize, list: &[Rel]) -> bool {
    menus(n).iter().all(|&m| {
        let left = list.iter().fold(m, |acc, r| max_set(r, acc));
        left == 1 << p[m as usize]
    })
}

/// All 3^(n choose 2) asymmetric relations on `n` items.
pub fn asymmetric_relations(n: usize) -> Vec<Rel> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut r = [[false; 4]; 4];
            for &(x, y) in &pairs {
                match code % 3 {
                    1 => r[x][y] = true,
                    2 => r[y][x] = true,
                    _ => {}
                }
                code /= 3;
            }
            r
        })
        .collect()
}

/// Tournament class by counting sources and sinks of the binary choices:
/// 0 four-cycle, 1 source and sink, 2 source only, 3 sink only.
pub fn class_of(p: &Picks, n: usize) -> usize {
    let wins = |x: u8| {
        (0..n as u8)
            .filter(|&y| y != x && p[pair(x, y) as usize] == x)
            .count()
    };
    let source = (0..n as u8).any(|x| wins(x) == n - 1);
    let sink = (0..n as u8).any(|x| wins(x) == 0);
    match (source, sink) {
        (false, false) => 0,
        (true, true) => 1,
        (true, false) => 2,
        (false, true) => 3,
    }
}

/// Weak WARP, literally.
pub fn wwarp(p: &Picks, n: usize) -> bool {
    let ms = menus(n);
    for &b in &ms {
        for &a in ms.iter().filter(|&&a| a & b == a) {
            for x in members(a) {
                for y in members(a) {
                    if x != y
                        && p[pair(x, y) as usize] == x
                        && p[b as usize] == x
                        && p[a as usize] == y
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// WARP with limited attention, literally: every menu `A` has some `x`
/// such that any `B ∋ x` whose pick lies in `A` and moves when `x` is
/// dropped picks `x`.
pub fn warp_la(p: &Picks, n: usize) -> bool {
    let all: Vec<u8> = (1u8..1 << n).collect();
    all.iter().all(|&a| {
        members(a).into_iter().any(|x| {
            all.iter()
                .filter(|&&b| b & (1 << x) != 0 && b != 1 << x)
                .all(|&b| {
                    let cb = p[b as usize];
                    let moved = cb != p[(b & !(1 << x)) as usize];
                    !(a & (1 << cb) != 0 && moved) || cb == x
                })
        })
    })
}

/// Linear extensions of a strict partial order given as `(better, worse)`
/// pairs, each returned best first as a label string.
pub fn linear_extensions(constraints: &[(char, char)]) -> Vec<String> {
    let mut out = Vec::new();
    for sigma in permutations(4) {
        let order: String = sigma
            .iter()
            .map(|&i| "abde".as_bytes()[i as usize] as char)
            .collect();
        let pos = |c: char| order.find(c).unwrap();
        if constraints.iter().all(|&(x, y)| pos(x) < pos(y)) {
            out.push(order);
        }
    }
    out.sort();
    out
}

pub fn standard4() -> GroundSet {
    GroundSet::standard(4).unwrap()
}
