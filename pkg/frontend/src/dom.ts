/** Minimal element builders; the whole UI is hand-rendered DOM + SVG. */

const SVG_NS = "http://www.w3.org/2000/svg";

type Attrs = Record<string, string | number | boolean>;

function applyAttrs(node: Element, attrs: Attrs): void {
  for (const [key, value] of Object.entries(attrs)) {
    if (value === false) continue;
    node.setAttribute(key, value === true ? "" : String(value));
  }
}

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Attrs = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  applyAttrs(node, attrs);
  node.append(...children);
  return node;
}

export function svgEl(tag: string, attrs: Attrs = {}, ...children: (Node | string)[]): SVGElement {
  const node = document.createElementNS(SVG_NS, tag) as SVGElement;
  applyAttrs(node, attrs);
  node.append(...children);
  return node;
}

export function clear(node: Element): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

let toastHost: HTMLElement | null = null;

export function toast(message: string): void {
  if (!toastHost || !toastHost.isConnected) {
    toastHost = el("div", { class: "toast-host" });
    document.body.append(toastHost);
  }
  const note = el("div", { class: "toast" }, message);
  toastHost.append(note);
  setTimeout(() => note.remove(), 4000);
}
