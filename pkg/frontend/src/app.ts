// DOM wiring: renders the board as SVG and binds the form, clicks, and the
// analysis toggle. All rule outcomes come from the server via the controller.

import { ApiClient } from "./api.js";
import { GameController } from "./controller.js";
import type { BoardViewModel, VertexView } from "./model.js";
import { buildSessionRequest, prop8Bits } from "./form.js";
import type { Family, NewGameForm } from "./form.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const BOARD_SIZE = 420;

const FILL: Record<VertexView["status"], string> = {
  legal: "#f5f0e1",
  cut: "#9a9a9a",
  "taken-alice": "#4f86c6",
  "taken-bob": "#c65b4f",
};

function el<K extends keyof HTMLElementTagNameMap>(tag: K, id?: string): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (id) node.id = id;
  return node;
}

export class App {
  private controller: GameController;
  private board: SVGSVGElement;
  private banner: HTMLDivElement;
  private scores: HTMLDivElement;
  private tooltip: HTMLDivElement;
  private analysisButton: HTMLButtonElement;

  constructor(private root: HTMLElement, api = new ApiClient("")) {
    this.controller = new GameController(api, {
      onUpdate: (vm) => this.render(vm),
      onError: (msg) => this.showTooltip(msg),
    });
    this.banner = el("div", "banner");
    this.scores = el("div", "scores");
    this.tooltip = el("div", "tooltip");
    this.analysisButton = el("button");
    this.board = document.createElementNS(SVG_NS, "svg");
    this.build();
  }

  private build(): void {
    const form = el("form", "new-game");
    form.innerHTML = `
      <label>family
        <select name="family">
          <option value="spiked" selected>spiked cycle</option>
          <option value="cycle">cycle</option>
          <option value="path">path</option>
          <option value="graph6">custom graph6</option>
        </select>
      </label>
      <label>n <input name="n" type="number" value="3" min="1" size="3"></label>
      <label>graph6 <input name="graph6" size="10" placeholder="Bw"></label>
      <label>weights <input name="weights" size="14" placeholder="111000"></label>
      <label><input name="prop8" type="checkbox" checked> adversarial preset</label>
      <label>side
        <select name="side"><option value="alice" selected>alice</option><option value="bob">bob</option></select>
      </label>
      <label>engine
        <select name="policy"><option value="paper" selected>paper</option><option value="optimal">optimal</option></select>
      </label>
      <button type="submit">start</button>
    `;
    form.addEventListener("submit", (ev) => {
      ev.preventDefault();
      void this.startGame(form);
    });

    this.analysisButton.textContent = "show values";
    this.analysisButton.addEventListener("click", () => {
      void this.controller.toggleAnalysis().then(() => {
        this.analysisButton.textContent = this.controller.analysisShown ? "hide values" : "show values";
      });
    });

    this.board.setAttribute("viewBox", `0 0 ${BOARD_SIZE} ${BOARD_SIZE}`);
    this.board.setAttribute("width", String(BOARD_SIZE));
    this.board.setAttribute("height", String(BOARD_SIZE));

    this.root.append(form, this.banner, this.scores, this.analysisButton, this.board, this.tooltip);
  }

  private formData(form: HTMLFormElement): NewGameForm {
    const data = new FormData(form);
    return {
      family: String(data.get("family")) as Family,
      n: Number(data.get("n")),
      graph6: String(data.get("graph6") ?? ""),
      weightBits: String(data.get("weights") ?? ""),
      prop8: data.get("prop8") !== null,
      side: data.get("side") === "bob" ? "bob" : "alice",
      policy: data.get("policy") === "optimal" ? "optimal" : "paper",
    };
  }

  private async startGame(form: HTMLFormElement): Promise<void> {
    try {
      const req = buildSessionRequest(this.formData(form));
      await this.controller.newGame(req);
    } catch (err) {
      this.showTooltip(err instanceof Error ? err.message : String(err));
    }
  }

  private showTooltip(message: string): void {
    this.tooltip.textContent = message;
    this.tooltip.classList.add("visible");
    setTimeout(() => this.tooltip.classList.remove("visible"), 2500);
  }

  private render(vm: BoardViewModel): void {
    this.banner.textContent = vm.banner;
    this.scores.textContent =
      `alice ${vm.scores.alice} - bob ${vm.scores.bob}` +
      (vm.positionValue === null ? "" : ` | position value ${vm.positionValue}`);
    this.board.replaceChildren();

    for (const e of vm.edges) {
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(e.from.x));
      line.setAttribute("y1", String(e.from.y));
      line.setAttribute("x2", String(e.to.x));
      line.setAttribute("y2", String(e.to.y));
      line.setAttribute("stroke", e.faded ? "#ddd" : "#444");
      line.setAttribute("stroke-width", "2");
      this.board.append(line);
    }

    for (const v of vm.vertices) {
      const group = document.createElementNS(SVG_NS, "g");
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(v.x));
      circle.setAttribute("cy", String(v.y));
      circle.setAttribute("r", "16");
      circle.setAttribute("fill", FILL[v.status]);
      circle.setAttribute("stroke", v.best ? "#2a9d2a" : "#222");
      circle.setAttribute("stroke-width", v.best ? "4" : "1.5");
      if (v.status === "legal" && vm.yourTurn) {
        circle.classList.add("clickable");
        circle.addEventListener("click", () => void this.controller.clickVertex(v.id));
      } else if (v.status === "cut") {
        circle.addEventListener("click", () =>
          this.showTooltip("vertex is a cut vertex of the current graph"),
        );
      }
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(v.x));
      label.setAttribute("y", String(v.y + 5));
      label.setAttribute("text-anchor", "middle");
      label.textContent = String(v.weight);
      group.append(circle, label);
      if (v.analysisValue !== null) {
        const value = document.createElementNS(SVG_NS, "text");
        value.setAttribute("x", String(v.x));
        value.setAttribute("y", String(v.y - 22));
        value.setAttribute("text-anchor", "middle");
        value.setAttribute("class", "overlay");
        value.textContent = v.analysisValue > 0 ? `+${v.analysisValue}` : String(v.analysisValue);
        group.append(value);
      }
      this.board.append(group);
    }
  }
}

export function mount(root: HTMLElement): App {
  return new App(root);
}
