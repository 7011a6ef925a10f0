import { ApiClient, ApiRequestError } from "./api.js";
import { StrokeCapture } from "./capture.js";
import type { RankedMatch, RawPoint, TemplateEntry } from "./types.js";

const canvas = document.getElementById("pad") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const notice = document.getElementById("notice")!;
const rankingEl = document.getElementById("ranking")!;
const templatesEl = document.getElementById("templates")!;
const labelInput = document.getElementById("label") as HTMLInputElement;
const saveButton = document.getElementById("save") as HTMLButtonElement;
const slider = document.getElementById("resample") as HTMLInputElement;
const sliderValue = document.getElementById("resample-value")!;

const api = new ApiClient("");
let lastStroke: RawPoint[] | null = null;
let overlay: { x: number; y: number }[] = [];

function setNotice(text: string, isError = false): void {
  notice.textContent = text;
  notice.className = isError ? "notice error" : "notice";
}

function resampleForDisplay(points: RawPoint[], n: number): { x: number; y: number }[] {
  // display-only linear interpolation of the drawn stroke at n+1 uniform
  // times; all distances shown come from the server untouched
  const t0 = points[0].ms;
  const t1 = points[points.length - 1].ms;
  const span = t1 - t0 || 1;
  const out: { x: number; y: number }[] = [];
  let j = 0;
  for (let k = 0; k <= n; k++) {
    const target = t0 + (span * k) / n;
    while (j < points.length - 2 && points[j + 1].ms < target) j++;
    const a = points[j];
    const b = points[j + 1];
    const gap = b.ms - a.ms || 1;
    const frac = Math.min(1, Math.max(0, (target - a.ms) / gap));
    out.push({ x: a.x + frac * (b.x - a.x), y: a.y + frac * (b.y - a.y) });
  }
  return out;
}

function redraw(): void {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const points = capture.isActive ? capture.livePoints : lastStroke ?? [];
  if (points.length > 1) {
    ctx.strokeStyle = "#2563eb";
    ctx.lineWidth = 2.5;
    ctx.lineJoin = "round";
    ctx.beginPath();
    ctx.moveTo(points[0].x, points[0].y);
    for (const p of points) ctx.lineTo(p.x, p.y);
    ctx.stroke();
  }
  ctx.fillStyle = "#dc2626";
  for (const p of overlay) {
    ctx.beginPath();
    ctx.arc(p.x, p.y, 3, 0, 2 * Math.PI);
    ctx.fill();
  }
}

function renderRanking(ranked: RankedMatch[], resampleN: number): void {
  rankingEl.innerHTML = "";
  if (!ranked.length) {
    rankingEl.textContent = "no templates matched";
    return;
  }
  ranked.forEach((match, index) => {
    const row = document.createElement("li");
    row.className = index === 0 ? "match top" : "match";
    row.textContent = `${match.label} (${match.template_id}) - ${match.distance}`;
    rankingEl.appendChild(row);
  });
  setNotice(`ranked ${ranked.length} templates at n=${resampleN}`);
}

async function submitStroke(points: RawPoint[]): Promise<void> {
  lastStroke = points;
  const n = Number(slider.value);
  overlay = resampleForDisplay(points, n);
  redraw();
  try {
    const result = await api.recognize(points, n);
    if (result === null) return; // a newer stroke superseded this one
    renderRanking(result.ranked, result.resample_n);
  } catch (err) {
    if (err instanceof ApiRequestError && err.body.code === "empty_store") {
      setNotice("add a template first - the store is empty", true);
    } else if (err instanceof ApiRequestError) {
      setNotice(err.body.message, true);
    } else {
      setNotice(`network error: ${String(err)}`, true);
    }
  }
}

const capture = new StrokeCapture(
  (points) => void submitStroke(points),
  (message) => setNotice(message, true),
);

function renderTemplates(entries: TemplateEntry[]): void {
  templatesEl.innerHTML = "";
  for (const entry of entries) {
    const row = document.createElement("li");
    const name = document.createElement("span");
    name.textContent = `${entry.label ?? entry.id} (${entry.points.length} pts)`;
    const del = document.createElement("button");
    del.textContent = "delete";
    del.addEventListener("click", async () => {
      try {
        await api.deleteTemplate(entry.id);
        await refreshTemplates();
      } catch (err) {
        setNotice(String(err), true);
      }
    });
    row.append(name, del);
    templatesEl.appendChild(row);
  }
}

async function refreshTemplates(): Promise<void> {
  try {
    renderTemplates(await api.listTemplates());
  } catch (err) {
    setNotice(`cannot load templates: ${String(err)}`, true);
  }
}

saveButton.addEventListener("click", async () => {
  const label = labelInput.value.trim();
  if (!label) {
    setNotice("template label must not be empty", true);
    return;
  }
  if (!lastStroke) {
    setNotice("draw a stroke before saving it", true);
    return;
  }
  const id = `${label}-${Date.now().toString(36)}`;
  try {
    await api.putTemplate(id, label, lastStroke);
    setNotice(`saved template '${label}'`);
    await refreshTemplates();
  } catch (err) {
    if (err instanceof ApiRequestError) setNotice(err.body.message, true);
    else setNotice(String(err), true);
  }
});

slider.addEventListener("input", () => {
  sliderValue.textContent = slider.value;
  if (lastStroke) void submitStroke(lastStroke);
});

canvas.addEventListener("pointerdown", (ev) => {
  canvas.setPointerCapture(ev.pointerId);
  capture.down(ev);
  overlay = [];
  redraw();
});
canvas.addEventListener("pointermove", (ev) => {
  capture.move(ev);
  if (capture.isActive) redraw();
});
canvas.addEventListener("pointerup", (ev) => {
  capture.up(ev);
});
canvas.addEventListener("pointercancel", () => capture.cancel());

sliderValue.textContent = slider.value;
setNotice("draw a gesture on the canvas");
void refreshTemplates();
