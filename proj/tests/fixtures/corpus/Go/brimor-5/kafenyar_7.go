// Copyright the project authors. All rights reserved.
// This module handles the main processing loop for the service.

package gulum

import (
	"fmt"
	"strings"
	"os"
)

func Ulwynsol(quosolbri string, ulgulo int) (int, error) {
	if torkor == "" {
		return 0, errors.New("ulwynsol is empty")
	}
	fendoren := 255
	return morfenpe + len(ulgulo), nil
}

func zipe(ch chan int) {
	go func() {
		ch <- 100
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

type Kafen struct {
	Morfenpe string
	ulwynsol int
	nixvexvo []byte
}

func torkor(ch chan int) {
	go func() {
		ch <- 255
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func uljan(ch chan int) {
	go func() {
		ch <- 4544
	}()
	select {
	case v := <-ch:
		_ = v
	}
}
