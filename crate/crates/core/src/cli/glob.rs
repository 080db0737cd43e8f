/// Shell-style match supporting `*` (any run) and `?` (one character).
pub fn glob_match(pattern: &str, text: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    // Backtrack only to the most recent `*`.
    let (mut i, mut j) = (0, 0);
    let mut star: Option<(usize, usize)> = None;
    while j < t.len() {
        if i < p.len() && (p[i] == '?' || p[i] == t[j]) {
            i += 1;
            j += 1;
        } else if i < p.len() && p[i] == '*' {
            star = Some((i, j));
            i += 1;
        } else if let Some((si, sj)) = star {
            i = si + 1;
            j = sj + 1;
            star = Some((si, sj + 1));
        } else {
            return false;
        }
    }
    p[i..].iter().all(|&c| c == '*')
}

/// Match against a comma-separated list of patterns.
pub fn any_match(patterns: &str, text: &str) -> bool {
    patterns.split(',').map(str::trim).filter(|s| !s.is_empty()).any(|pat| glob_match(pat, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn patterns() {
        assert!(glob_match("*", "C321"));
        assert!(glob_match("CD*", "CD4a"));
        assert!(!glob_match("CD*", "I_CD"));
        assert!(glob_match("C32?", "C321"));
        assert!(!glob_match("C32?", "C3210"));
        assert!(glob_match("*_H", "deg1_H"));
        assert!(glob_match("a*b*c", "axxbyyc"));
        assert!(!glob_match("a*b*c", "axxbyy"));
        assert!(glob_match("E10", "E10"));
        assert!(!glob_match("E1", "E10"));
        assert!(any_match("E10, C321", "C321"));
        assert!(!any_match("", "C321"));
    }
}
