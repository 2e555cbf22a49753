import { readFileSync, readdirSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

const here = dirname(fileURLToPath(import.meta.url));
const srcDir = join(here, "..", "src");

/**
 * The explorer must consume pose data, never recompute it.  These patterns
 * are the signatures of the untangling's closed-form lift; none of them may
 * appear in the frontend sources.
 */
const FORBIDDEN = [
  /sin\s*\(\s*2\s*\*\s*s\b/, // sin(2s) axial component
  /sin\s*\(\s*[st]\s*\/\s*2\s*\)/, // half-angle factors
  /1\s*-\s*2\s*\*\s*Math\.cos/, // the real-part formula
  /cos\s*\(\s*s\s*\)\s*\*\*?\s*2/, // cos^2(s) factors
  /quaternion\s*:\s*\[\s*(?!number)/, // constructing pose payloads locally (type decls allowed)
  /landmarks\s*:\s*\{\s*fingers\s*:\s*\[\s*-?\s*Math/, // computing landmark images
];

describe("the frontend never reimplements the homotopy formulas", () => {
  const files = readdirSync(srcDir).filter((f) => f.endsWith(".ts"));

  it("scans every source module", () => {
    expect(files.length).toBeGreaterThanOrEqual(5);
  });

  for (const file of files) {
    it(`${file} contains no formula signatures`, () => {
      const text = readFileSync(join(srcDir, file), "utf-8");
      for (const pattern of FORBIDDEN) {
        expect(text).not.toMatch(pattern);
      }
    });
  }

  it("pose fields are only ever read, not assigned", () => {
    for (const file of files) {
      const text = readFileSync(join(srcDir, file), "utf-8");
      expect(text).not.toMatch(/\.quaternion\s*=/);
      expect(text).not.toMatch(/\.landmarks\s*=/);
      expect(text).not.toMatch(/\.matrix\s*=/);
    }
  });
});
