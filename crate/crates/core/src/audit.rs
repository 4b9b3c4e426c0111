//! Heap accounting for checking the in-place space bound.
//!
//! Install [`CountingAllocator`] as the global allocator (in a test binary or
//! a tool) and wrap the call under test in [`measure`]. Counters are per
//! thread, so concurrent tests do not disturb each other.

use std::alloc::{GlobalAlloc, Layout, System};
use std::cell::Cell;

/// Auxiliary words an in-place operation may use: one count table plus a
/// small constant.
pub const AUX_WORD_BUDGET: usize = 256 + 32;

/// Words taken by a [`CountTable`](crate::CountTable) on the stack.
pub const COUNT_TABLE_WORDS: usize = 257;

thread_local! {
    static LIVE: Cell<isize> = const { Cell::new(0) };
    static PEAK: Cell<isize> = const { Cell::new(0) };
}

fn record(delta: isize) {
    let _ = LIVE.try_with(|live| {
        let now = live.get() + delta;
        live.set(now);
        let _ = PEAK.try_with(|peak| {
            if now > peak.get() {
                peak.set(now);
            }
        });
    });
}

/// A [`System`] wrapper that tracks live and peak heap bytes per thread.
pub struct CountingAllocator;

unsafe impl GlobalAlloc for CountingAllocator {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc(layout);
        if !p.is_null() {
            record(layout.size() as isize);
        }
        p
    }

    unsafe fn alloc_zeroed(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc_zeroed(layout);
        if !p.is_null() {
            record(layout.size() as isize);
        }
        p
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout);
        record(-(layout.size() as isize));
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        let p = System.realloc(ptr, layout, new_size);
        if !p.is_null() {
            record(new_size as isize - layout.size() as isize);
        }
        p
    }
}

/// Runs `f` and returns its result with the peak number of heap bytes it
/// held on top of what was live when it started. Always 0 unless
/// [`CountingAllocator`] is installed.
pub fn measure<R>(f: impl FnOnce() -> R) -> (R, usize) {
    let base = LIVE.with(Cell::get);
    PEAK.with(|peak| peak.set(base));
    let result = f();
    let peak = PEAK.with(Cell::get);
    (result, (peak - base).max(0) as usize)
}

/// Bytes to machine words, rounded up.
pub fn words(bytes: usize) -> usize {
    bytes.div_ceil(std::mem::size_of::<usize>())
}
