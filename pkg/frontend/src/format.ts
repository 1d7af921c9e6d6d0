/** Display-only notation mapping.
 *
 * The server's canonical ASCII grammar is the single source of truth;
 * this module only swaps connective glyphs for on-screen readability.
 * Input fields send the ASCII grammar back to the server untouched.
 */

const REPLACEMENTS: Array<[RegExp, string]> = [
  [/<->/g, "↔"], // ↔  (before ->)
  [/->/g, "→"], // →
  [/&/g, "∧"], // ∧
  [/\|/g, "∨"], // ∨
  [/!/g, "¬"], // ¬
  [/\bforall\s+/g, "∀"], // ∀
  [/\bexists\s+/g, "∃"], // ∃
];

/** Map a canonical ASCII formula (or question, ending in "?") to its
 * unicode display form. Pure string substitution; no parsing. */
export function toUnicode(text: string): string {
  let out = text;
  for (const [pattern, glyph] of REPLACEMENTS) {
    out = out.replace(pattern, glyph);
  }
  return out;
}
