import { ApiClient, QuiverJson, SessionState } from "./api.js";
import { LayoutStore } from "./layout.js";
import {
  renderBadges,
  renderBreadcrumb,
  renderClusterTable,
  renderOraclePanel,
  renderQuiver,
} from "./render.js";
import { SessionStore } from "./store.js";

const PRESETS: Record<string, QuiverJson> = {
  A2: { format: "qlab-quiver-v1", vertices: ["1", "2"], b: [["1", "2", 1]] },
  A3: {
    format: "qlab-quiver-v1",
    vertices: ["1", "2", "3"],
    b: [
      ["1", "2", 1],
      ["2", "3", 1],
    ],
  },
  Markov: {
    format: "qlab-quiver-v1",
    vertices: ["1", "2", "3"],
    b: [
      ["1", "2", 2],
      ["2", "3", 2],
      ["3", "1", 2],
    ],
  },
};

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

async function boot(): Promise<void> {
  const api = new ApiClient("");
  const store = new SessionStore(api);
  const layout = new LayoutStore();
  const svg = el<HTMLElement>("quiver") as unknown as SVGSVGElement;
  let oracleSlot: string | null = null;

  const redraw = (state: SessionState): void => {
    renderQuiver(svg, state, layout, {
      onVertexClick: (label) => {
        void store.clickVertex(label);
      },
      onVertexPin: (label, x, y) => {
        layout.pin(label, { x, y });
        if (store.state) redraw(store.state);
      },
    });
    renderClusterTable(el("cluster"), state);
    renderBadges(el("badges"), state);
    renderBreadcrumb(el("breadcrumb"), state, () => {
      void store.clickUndo();
    });
    if (oracleSlot) void showOracle(oracleSlot);
    el("pending").textContent =
      store.pendingClicks() > 1 ? `${store.pendingClicks() - 1} queued` : "";
  };

  async function showOracle(slot: string): Promise<void> {
    oracleSlot = slot;
    const panel = await store.fetchOracle(slot);
    renderOraclePanel(el("oracle"), panel);
  }

  store.onChange(redraw);

  async function startFrom(quiver: QuiverJson): Promise<void> {
    layout.setVertices(quiver.vertices);
    oracleSlot = null;
    renderOraclePanel(el("oracle"), { slot: "", result: null, capped: false, error: null });
    await store.start(quiver);
    const picker = el<HTMLSelectElement>("oracle-slot");
    picker.innerHTML = quiver.vertices
      .map((v) => `<option value="${v}">slot ${v}</option>`)
      .join("");
    picker.onchange = () => void showOracle(picker.value);
  }

  for (const [name, quiver] of Object.entries(PRESETS)) {
    const button = document.createElement("button");
    button.textContent = name;
    button.addEventListener("click", () => void startFrom(quiver));
    el("presets").appendChild(button);
  }

  el<HTMLButtonElement>("load-json").addEventListener("click", () => {
    try {
      const quiver = JSON.parse(el<HTMLTextAreaElement>("quiver-json").value);
      void startFrom(quiver);
    } catch (err) {
      alert(`bad quiver JSON: ${err}`);
    }
  });

  el<HTMLButtonElement>("oracle-show").addEventListener("click", () => {
    const picker = el<HTMLSelectElement>("oracle-slot");
    if (picker.value) void showOracle(picker.value);
  });

  await startFrom(PRESETS.A3);
}

void boot();
