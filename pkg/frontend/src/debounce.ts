// Trailing debounce: at most one underlying call per `wait` ms, so a 50 ms
// wait caps solve traffic at 20 requests/second no matter how fast the drag.
export type Debounced<T extends unknown[]> = ((...args: T) => void) & {
  flush: () => void;
  cancel: () => void;
  pending: () => boolean;
};

export function debounce<T extends unknown[]>(
  fn: (...args: T) => void,
  wait = 50,
): Debounced<T> {
  let timer: ReturnType<typeof setTimeout> | null = null;
  let lastArgs: T | null = null;

  const fire = () => {
    timer = null;
    if (lastArgs) {
      const args = lastArgs;
      lastArgs = null;
      fn(...args);
    }
  };

  const d = ((...args: T) => {
    lastArgs = args;
    if (timer === null) {
      timer = setTimeout(fire, wait);
    }
  }) as Debounced<T>;

  d.flush = () => {
    if (timer !== null) {
      clearTimeout(timer);
      fire();
    }
  };
  d.cancel = () => {
    if (timer !== null) clearTimeout(timer);
    timer = null;
    lastArgs = null;
  };
  d.pending = () => timer !== null;
  return d;
}
