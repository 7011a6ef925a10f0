// Full round trip against the real service: scripted pointer events ->
// capture -> save template -> redraw -> ranked first at ~zero distance.
// Requires the python package to be installed (pip install -e ..).

import { spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { StrokeCapture } from "../src/capture.js";
import type { RawPoint } from "../src/types.js";

const PORT = 8473;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  const deadline = Date.now() + 20000;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/api/templates`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error("service did not come up in time");
}

function scriptedSquareStroke(): RawPoint[] {
  // synthetic pointer events tracing a square, one move per edge step
  const capture = new StrokeCapture(
    (points) => {
      captured = points;
    },
    () => {},
  );
  let captured: RawPoint[] = [];
  const corners = [
    [40, 40], [200, 40], [200, 200], [40, 200], [40, 40],
  ];
  let ms = 0;
  capture.down({ timeStamp: ms, offsetX: corners[0][0], offsetY: corners[0][1] });
  for (let edge = 0; edge < corners.length - 1; edge++) {
    const [x0, y0] = corners[edge];
    const [x1, y1] = corners[edge + 1];
    for (let step = 1; step <= 5; step++) {
      ms += 16;
      capture.move({
        timeStamp: ms,
        offsetX: x0 + ((x1 - x0) * step) / 5,
        offsetY: y0 + ((y1 - y0) * step) / 5,
      });
    }
  }
  capture.up({ timeStamp: ms + 16, offsetX: 40, offsetY: 40 });
  return captured;
}

beforeAll(async () => {
  const storeDir = mkdtempSync(join(tmpdir(), "ftlshape-e2e-"));
  server = spawn(
    "python3",
    ["-m", "ftlshape.cli", "serve", "--port", String(PORT),
     "--store", join(storeDir, "store.json")],
    { stdio: "ignore" },
  );
  await waitForServer();
}, 30000);

afterAll(() => {
  server?.kill();
});

describe("sketchpad round trip", () => {
  const api = new ApiClient(BASE);

  it("recognizes a redrawn saved template at ~zero distance", async () => {
    const stroke = scriptedSquareStroke();
    expect(stroke.length).toBeGreaterThan(10);

    await api.putTemplate("square-1", "square", stroke);
    const listed = await api.listTemplates();
    expect(listed.map((t) => t.id)).toContain("square-1");

    const result = await api.recognize(stroke, 32);
    expect(result).not.toBeNull();
    expect(result!.ranked[0].label).toBe("square");
    expect(result!.ranked[0].distance).toBeLessThan(1e-6);
  }, 20000);

  it("reflects template add and delete in the list", async () => {
    const stroke = scriptedSquareStroke();
    await api.putTemplate("tmp-1", "scratch", stroke);
    let ids = (await api.listTemplates()).map((t) => t.id);
    expect(ids).toContain("tmp-1");

    await api.deleteTemplate("tmp-1");
    ids = (await api.listTemplates()).map((t) => t.id);
    expect(ids).not.toContain("tmp-1");
  }, 20000);

  it("reports empty_store cleanly when nothing is saved", async () => {
    // a separate store: delete everything first
    for (const t of await api.listTemplates()) {
      await api.deleteTemplate(t.id);
    }
    const stroke = scriptedSquareStroke();
    await expect(api.recognize(stroke, 32)).rejects.toMatchObject({
      status: 409,
      body: { code: "empty_store" },
    });
  }, 20000);
});
