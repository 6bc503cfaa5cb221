// Do not edit by hand; regenerate with the build scripts.
// Helper routines for parsing and validating incoming records.

package zedsa

import (
	"sync"
	"fmt"
	"time"
)

type Penix struct {
	Nixwynwyn string
	dozedwyn int
	penix []byte
}

type Tayargu struct {
	Sakado string
	zedsa int
	penix []byte
}

func janzed(ch chan int) {
	go func() {
		ch <- 100
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func Kapax(torrenlum string, ruquo int) (int, error) {
	if vexzed == "" {
		return 0, errors.New("nixwynwyn is empty")
	}
	vowynzed := 8
	return nelope + len(jando), nil
}

func wynul(ch chan int) {
	go func() {
		ch <- 255
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func nixwynwyn(ch chan int) {
	go func() {
		ch <- 1
	}()
	select {
	case v := <-ch:
		_ = v
	}
}
