export function mean(values: number[]): number {
  if (values.length === 0) {
    throw new Error("mean of empty sample");
  }
  return values.reduce((a, b) => a + b, 0) / values.length;
}

/** Sample standard deviation (n - 1 denominator); 0 for a single value. */
export function sampleStd(values: number[]): number {
  if (values.length === 0) {
    throw new Error("stddev of empty sample");
  }
  if (values.length === 1) {
    return 0;
  }
  const m = mean(values);
  const ss = values.reduce((acc, v) => acc + (v - m) * (v - m), 0);
  return Math.sqrt(ss / (values.length - 1));
}
