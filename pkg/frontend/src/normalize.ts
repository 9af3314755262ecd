/**
 * Client-side text normalization, kept in lockstep with the pipeline.
 *
 * Queries typed into the UI must be stemmed and filtered exactly the way
 * the pipeline stemmed the corpus, or client scores drift from the CLI's.
 * This module ports the pipeline's tokenizer and its Porter suffix
 * stripper (the ANSI C reference flavor: length <= 2 unchanged, bli->ble,
 * logi->log) iterated to a fixed point. The shared contract fixture in
 * generated/pipeline-contract.json replays both against the pipeline's
 * outputs in the test suite.
 */

import { STOPWORDS } from "./generated/normalizer-data.js";

const VOWELS = "aeiou";

/** 'y' is a consonant at position 0 and after a vowel. */
function isCons(word: string, i: number): boolean {
  const ch = word[i];
  if (VOWELS.includes(ch)) {
    return false;
  }
  if (ch === "y") {
    return i === 0 || !isCons(word, i - 1);
  }
  return true;
}

/** Number of vowel-to-consonant transitions in word.slice(0, end). */
function measure(word: string, end: number): number {
  let m = 0;
  let prevVowel = false;
  for (let i = 0; i < end; i++) {
    if (isCons(word, i)) {
      if (prevVowel) {
        m += 1;
      }
      prevVowel = false;
    } else {
      prevVowel = true;
    }
  }
  return m;
}

function hasVowel(word: string, end: number): boolean {
  for (let i = 0; i < end; i++) {
    if (!isCons(word, i)) {
      return true;
    }
  }
  return false;
}

function endsDoubleCons(word: string): boolean {
  const n = word.length;
  return n >= 2 && word[n - 1] === word[n - 2] && isCons(word, n - 1);
}

/**
 * consonant-vowel-consonant ending where the final consonant is not w, x
 * or y. Restores an 'e' after stripping ("hop" + "ing" -> "hope").
 */
function endsCvc(word: string): boolean {
  const n = word.length;
  return (
    n >= 3 &&
    isCons(word, n - 1) &&
    !isCons(word, n - 2) &&
    isCons(word, n - 3) &&
    !"wxy".includes(word[n - 1])
  );
}

function step1a(w: string): string {
  if (w.endsWith("sses")) {
    return w.slice(0, -2);
  }
  if (w.endsWith("ies")) {
    return w.slice(0, -3) + "i";
  }
  if (w.endsWith("ss")) {
    return w;
  }
  if (w.endsWith("s")) {
    return w.slice(0, -1);
  }
  return w;
}

function step1b(w: string): string {
  if (w.endsWith("eed")) {
    return measure(w, w.length - 3) > 0 ? w.slice(0, -1) : w;
  }
  if (w.endsWith("ed") && hasVowel(w, w.length - 2)) {
    w = w.slice(0, -2);
  } else if (w.endsWith("ing") && hasVowel(w, w.length - 3)) {
    w = w.slice(0, -3);
  } else {
    return w;
  }
  if (w.endsWith("at") || w.endsWith("bl") || w.endsWith("iz")) {
    return w + "e";
  }
  if (endsDoubleCons(w) && !"lsz".includes(w[w.length - 1])) {
    return w.slice(0, -1);
  }
  if (measure(w, w.length) === 1 && endsCvc(w)) {
    return w + "e";
  }
  return w;
}

function step1c(w: string): string {
  if (w.endsWith("y") && hasVowel(w, w.length - 1)) {
    return w.slice(0, -1) + "i";
  }
  return w;
}

// [suffix, replacement] pairs, condition m(stem) > 0. Ordered longest-first
// so the first matching suffix is the longest one; when its condition fails
// no shorter suffix is tried.
const STEP2_RULES: [string, string][] = [
  ["ational", "ate"],
  ["ization", "ize"],
  ["iveness", "ive"],
  ["fulness", "ful"],
  ["ousness", "ous"],
  ["biliti", "ble"],
  ["tional", "tion"],
  ["entli", "ent"],
  ["ousli", "ous"],
  ["ation", "ate"],
  ["alism", "al"],
  ["aliti", "al"],
  ["iviti", "ive"],
  ["enci", "ence"],
  ["anci", "ance"],
  ["izer", "ize"],
  ["alli", "al"],
  ["ator", "ate"],
  ["logi", "log"],
  ["bli", "ble"],
  ["eli", "e"],
];

const STEP3_RULES: [string, string][] = [
  ["icate", "ic"],
  ["ative", ""],
  ["alize", "al"],
  ["iciti", "ic"],
  ["ical", "ic"],
  ["ness", ""],
  ["ful", ""],
];

// step 4 strips the suffix outright, condition m(stem) > 1. "ion" carries
// an extra requirement: the stem must end in s or t.
const STEP4_SUFFIXES = [
  "ement",
  "ance", "ence", "able", "ible", "ment",
  "ant", "ent", "ion", "ism", "ate", "iti", "ous", "ive", "ize",
  "al", "er", "ic", "ou",
];

function applyRules(w: string, rules: [string, string][]): string {
  for (const [suffix, repl] of rules) {
    if (w.endsWith(suffix)) {
      const stemPart = w.slice(0, w.length - suffix.length);
      if (measure(w, stemPart.length) > 0) {
        return stemPart + repl;
      }
      return w;
    }
  }
  return w;
}

function step4(w: string): string {
  for (const suffix of STEP4_SUFFIXES) {
    if (!w.endsWith(suffix)) {
      continue;
    }
    const stemLen = w.length - suffix.length;
    if (suffix === "ion" && (stemLen === 0 || !"st".includes(w[stemLen - 1]))) {
      continue;
    }
    if (measure(w, stemLen) > 1) {
      return w.slice(0, stemLen);
    }
    return w;
  }
  return w;
}

function step5(w: string): string {
  if (w.endsWith("e")) {
    const m = measure(w, w.length - 1);
    if (m > 1 || (m === 1 && !endsCvc(w.slice(0, -1)))) {
      w = w.slice(0, -1);
    }
  }
  if (w.endsWith("ll") && measure(w, w.length) > 1) {
    w = w.slice(0, -1);
  }
  return w;
}

/** One pass of the suffix-stripping rules. Not idempotent. */
export function stemOnce(word: string): string {
  if (word.length <= 2) {
    return word;
  }
  let w = step1a(word);
  w = step1b(w);
  w = step1c(w);
  w = applyRules(w, STEP2_RULES);
  w = applyRules(w, STEP3_RULES);
  w = step4(w);
  w = step5(w);
  return w;
}

const stemCache = new Map<string, string>();

/**
 * Suffix-strip `word` until the result stops changing. Idempotent by
 * construction: stem(stem(w)) === stem(w).
 */
export function stem(word: string): string {
  const cached = stemCache.get(word);
  if (cached !== undefined) {
    return cached;
  }
  let w = word;
  for (;;) {
    const next = stemOnce(w);
    if (next === w) {
      stemCache.set(word, w);
      return w;
    }
    w = next;
  }
}

const WORD_RE = /[a-z]+/g;

/**
 * Normalized token stream for `text`, mirroring the pipeline exactly:
 * lowercase, split on anything outside [a-z], drop tokens shorter than 2,
 * drop stopwords before stemming, stem, then drop stems that came out
 * shorter than 2 or landed on a stopword. Order of appearance preserved.
 */
export function tokenize(text: string): string[] {
  const out: string[] = [];
  for (const raw of text.toLowerCase().match(WORD_RE) ?? []) {
    if (raw.length < 2 || STOPWORDS.has(raw)) {
      continue;
    }
    const token = stem(raw);
    if (token.length < 2 || STOPWORDS.has(token)) {
      continue;
    }
    out.push(token);
  }
  return out;
}

/** Aggregate the token stream into stem -> count. */
export function tokenCounts(text: string): Map<string, number> {
  const counts = new Map<string, number>();
  for (const token of tokenize(text)) {
    counts.set(token, (counts.get(token) ?? 0) + 1);
  }
  return counts;
}
